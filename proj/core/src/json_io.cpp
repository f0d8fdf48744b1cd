#include "wdrkit/json_io.hpp"

#include <array>

namespace wdrkit {

json to_json(DistancePair p) { return json::array({p.forward, p.backward}); }

json to_json(const ArcTypeCensus& census) {
  json out = json::array();
  for (const auto& [type, valency] : census.valency) out.push_back({{"type", to_json(type)}, {"valency", valency}});
  return out;
}

json to_json(const IsoCertificate& c) { return json(c.mapping); }

json to_json(const CayleySpec& spec) {
  return {{"moduli", spec.moduli}, {"connection_set", spec.connection_set}, {"spec", spec.to_string()}};
}

json report_to_json(const WdrReport& report, const Digraph& d) {
  json out;
  out["spec"] = report.spec;
  out["vertex_count"] = report.vertex_count;
  out["arc_count"] = report.arc_count;
  out["is_wdr"] = report.is_wdr;
  out["girth"] = report.girth;
  out["arc_types"] = report.arc_types ? to_json(*report.arc_types) : json(nullptr);
  json relations = json::array();
  for (auto r : report.relations) relations.push_back(to_json(r));
  out["relations"] = std::move(relations);
  if (report.tensor) {
    const auto& t = *report.tensor;
    out["commutative"] = report.commutative;
    out["thin"] = report.thin;
    out["valencies"] = t.valencies();
    // sparse [h, i, j, p] over relation ids
    json entries = json::array();
    const auto r = static_cast<RelationId>(t.relation_count());
    for (RelationId h = 0; h < r; ++h) {
      for (RelationId i = 0; i < r; ++i) {
        for (RelationId j = 0; j < r; ++j) {
          if (const auto p = t.p(h, i, j); p != 0) entries.push_back({h, i, j, p});
        }
      }
    }
    out["intersection_numbers"] = std::move(entries);
  } else {
    out["commutative"] = nullptr;
    out["thin"] = nullptr;
    out["valencies"] = nullptr;
    out["intersection_numbers"] = nullptr;
  }
  if (report.witness) {
    const auto& w = *report.witness;
    auto pair_json = [&](Arc a, std::size_t count) {
      return json{{"x", a.tail}, {"y", a.head}, {"x_label", d.label(a.tail)}, {"y_label", d.label(a.head)}, {"count", count}};
    };
    out["witness"] = {{"h", to_json(w.h)}, {"i", to_json(w.i)}, {"j", to_json(w.j)},
                      {"pair1", pair_json(w.pair1, w.count1)}, {"pair2", pair_json(w.pair2, w.count2)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json construct_metadata(const Digraph& d) {
  return {{"spec", d.spec()}, {"vertex_count", d.vertex_count()}, {"arc_count", d.arc_count()}, {"labels", d.labels()}};
}

json sweep_to_json(const SweepSpec& spec, const SweepResult& result) {
  json rows = json::array();
  std::size_t agreeing = 0;
  for (const auto& row : result.rows) {
    json r{{"label", row.label}, {"is_wdr", row.is_wdr}, {"expected_wdr", row.expected_wdr}, {"agree", row.agree}};
    if (spec.law == Law::kGammaQsk) {
      r["q"] = row.q;
      r["s"] = row.s;
      r["k"] = row.k;
      r["condition"] = std::string(to_string(row.condition));
    } else {
      r["g"] = row.g;
    }
    agreeing += row.agree ? 1 : 0;
    rows.push_back(std::move(r));
  }
  const auto first = result.first_disagreement();
  return {{"law", std::string(to_string(spec.law))},
          {"tuple_count", result.rows.size()},
          {"agree_count", agreeing},
          {"first_disagreement", first ? json(result.rows[*first].label) : json(nullptr)},
          {"rows", std::move(rows)}};
}

json census_to_json(const CensusResult& result) {
  const auto& c = result.counts;
  json hits = json::array();
  for (const auto& hit : result.hits) {
    hits.push_back({{"order", hit.order},
                    {"cayley", to_json(hit.spec)},
                    {"multiplicity", hit.multiplicity},
                    {"matched", hit.matched.empty() ? json(nullptr) : json(hit.matched)}});
  }
  return {{"max_order", result.max_order},
          {"counts",
           {{"groups", c.groups},
            {"subsets", c.subsets},
            {"not_strongly_connected", c.not_strongly_connected},
            {"girth_two", c.girth_two},
            {"wrong_arc_types", c.wrong_arc_types},
            {"not_wdr", c.not_wdr},
            {"raw_hits", c.raw_hits}}},
          {"hit_classes", result.hits.size()},
          {"unmatched", result.unmatched()},
          {"hits", std::move(hits)}};
}

json verify_iso_to_json(const GammaQskParams& params, const VerifyIsoResult& result) {
  const auto& p = result.target.parameters;
  json out{{"spec", params.spec()},
           {"condition", std::string(to_string(result.target.condition))},
           {"target", to_json(result.target.spec)},
           {"map", json(result.target.map.mapping)},
           {"explicit_map_ok", result.explicit_map_ok},
           {"search_found", result.search.has_value()},
           {"search_ok", result.search_ok},
           {"ok", result.ok()}};
  if (result.target.condition == Condition::kC3) {
    out["parameters"] = {{"gcd_qp", p.gcd_qp}, {"d_twice", p.d_twice}, {"l", p.l},
                         {"h", p.h},           {"i", p.i},             {"u", p.u}};
  } else {
    out["parameters"] = nullptr;
  }
  out["search_certificate"] = result.search ? to_json(*result.search) : json(nullptr);
  return out;
}

json quotient_to_json(const Digraph& d, std::span<const DistancePair> generators, const VertexPartition& vp,
                      const Digraph& quotient, std::optional<int> circuit) {
  json gens = json::array();
  for (auto g : generators) gens.push_back(to_json(g));
  json blocks = json::array();
  for (const auto& block : vp.blocks) {
    json members = json::array();
    for (Vertex v : block) members.push_back(d.label(v));
    blocks.push_back(std::move(members));
  }
  std::vector<std::array<Vertex, 2>> arcs;
  for (const auto& a : quotient.arcs()) arcs.push_back({a.tail, a.head});
  return {{"spec", d.spec()},
          {"generators", std::move(gens)},
          {"block_count", vp.block_count()},
          {"blocks", std::move(blocks)},
          {"arcs", arcs},
          {"circuit_length", circuit ? json(*circuit) : json(nullptr)}};
}

}  // namespace wdrkit
