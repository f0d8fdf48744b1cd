#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wdrkit/digraph.hpp"
#include "wdrkit/distance.hpp"

namespace wdrkit {

/// One node line per vertex, then one `u -> v [label="(1,r)"]` line per arc in
/// (u,v) order. `comments` go verbatim after the header as `// ...` lines.
std::string to_dot(const Digraph& d, const DistancePairMatrix& m,
                   const std::vector<std::string>& comments = {});

/// Same layout without arc-type labels (for digraphs that are not strongly
/// connected).
std::string to_dot_untyped(const Digraph& d, const std::vector<std::string>& comments = {});

/// Reads the subset of DOT that to_dot writes: `N [label="..."]` node lines and
/// `u -> v` arc lines with numeric ids. Throws Error(kParse).
Digraph parse_dot(std::string_view text);

}  // namespace wdrkit
