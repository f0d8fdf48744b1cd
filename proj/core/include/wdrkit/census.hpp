#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wdrkit/families.hpp"

namespace wdrkit {

/// Invariant factors d1 | d2 | ... | dr with d1 > 1, one list per abelian
/// group of the given order, ordered lexicographically.
std::vector<std::vector<int>> abelian_group_shapes(int order);

struct CensusSpec {
  int max_order = 36;
  int cap = 36;
  unsigned jobs = 1;
};

struct CensusHit {
  CayleySpec spec;
  int order = 0;
  /// Raw Cayley hits isomorphic to this one, the representative included.
  int multiplicity = 1;
  /// Label of the matching family member; empty when unmatched.
  std::string matched;
  Digraph digraph;
};

struct CensusCounts {
  std::int64_t groups = 0;
  std::int64_t subsets = 0;
  std::int64_t not_strongly_connected = 0;
  std::int64_t girth_two = 0;
  std::int64_t wrong_arc_types = 0;
  std::int64_t not_wdr = 0;
  std::int64_t raw_hits = 0;
};

struct CensusResult {
  int max_order = 0;
  CensusCounts counts;
  /// One representative per isomorphism class, by order then discovery.
  std::vector<CensusHit> hits;

  std::size_t unmatched() const;
};

/// Enumerates every abelian group of order <= max_order and every 3-subset of
/// its nonidentity elements, keeps strongly connected Cayley digraphs with
/// girth > 2, exactly two arc types and WDR, folds isomorphic hits and matches
/// each class against theorem_families. Throws Error(kLimitExceeded) when
/// max_order exceeds the cap and Error(kInvalidParameters) when it is below 1.
CensusResult run_census(const CensusSpec& spec);

}  // namespace wdrkit
