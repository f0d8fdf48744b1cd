#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "wdrkit/digraph.hpp"
#include "wdrkit/families.hpp"

namespace wdrkit {

struct GammaGSpec {
  int g = 0;
};

struct GammaQskSpec {
  int q = 0;
  int s = 0;
  int k = 0;
};

/// Parsed form of "gamma-g:g=5", "gamma-qsk:q=3,s=8,k=3" or
/// "cayley:mods=4,3;set=(1,0)(0,1)(2,1)". Parameters are not validated here.
using FamilySpec = std::variant<GammaGSpec, GammaQskSpec, CayleySpec>;

/// Throws Error(kParse).
FamilySpec parse_family_spec(std::string_view text);

/// Throws Error(kInvalidParameters) (or kNotStronglyConnected for a
/// non-generating connection set).
Digraph build_family(const FamilySpec& spec);

inline Digraph build_from_spec(std::string_view text) { return build_family(parse_family_spec(text)); }

/// Accepts either "q=3,s=8,k=3" or the full "gamma-qsk:..." form.
GammaQskSpec parse_qsk_arguments(std::string_view text);

}  // namespace wdrkit
