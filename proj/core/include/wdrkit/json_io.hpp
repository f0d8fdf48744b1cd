#pragma once

#include <nlohmann/json.hpp>

#include "wdrkit/census.hpp"
#include "wdrkit/digraph.hpp"
#include "wdrkit/families.hpp"
#include "wdrkit/iso.hpp"
#include "wdrkit/quotient.hpp"
#include "wdrkit/scheme.hpp"
#include "wdrkit/sweep.hpp"

namespace wdrkit {

using nlohmann::json;

json to_json(DistancePair p);
json to_json(const ArcTypeCensus& census);
json to_json(const IsoCertificate& c);
json to_json(const CayleySpec& spec);

/// Vertex labels are taken from d.
json report_to_json(const WdrReport& report, const Digraph& d);
json construct_metadata(const Digraph& d);
json sweep_to_json(const SweepSpec& spec, const SweepResult& result);
json census_to_json(const CensusResult& result);
json verify_iso_to_json(const GammaQskParams& params, const VerifyIsoResult& result);
json quotient_to_json(const Digraph& d, std::span<const DistancePair> generators, const VertexPartition& vp,
                      const Digraph& quotient, std::optional<int> circuit);

}  // namespace wdrkit
