#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wdrkit/digraph.hpp"

namespace wdrkit {

/// Two-way distance (d(x,y), d(y,x)).
struct DistancePair {
  int forward = 0;
  int backward = 0;

  DistancePair converse() const { return {backward, forward}; }
  std::string to_string() const;

  friend auto operator<=>(const DistancePair&, const DistancePair&) = default;
};

/// n x n table of two-way distances of a strongly connected digraph, built by
/// one BFS per source. Only the forward table is stored.
class DistancePairMatrix {
 public:
  /// Throws Error(kNotStronglyConnected) naming an unreachable ordered pair.
  static DistancePairMatrix compute(const Digraph& d);

  std::size_t vertex_count() const noexcept { return n_; }
  int distance(Vertex x, Vertex y) const { return dist_[x * n_ + y]; }
  DistancePair at(Vertex x, Vertex y) const { return {distance(x, y), distance(y, x)}; }
  int diameter() const;

 private:
  std::size_t n_ = 0;
  std::vector<int> dist_;
};

inline DistancePairMatrix distance_pairs(const Digraph& d) { return DistancePairMatrix::compute(d); }

/// Length of a shortest directed cycle: min over arcs (u,v) of d(v,u)+1.
int girth(const Digraph& d, const DistancePairMatrix& m);
int girth(const Digraph& d);

/// (1, d(v,u)) for the arc (u,v). Throws Error(kNotAnArc).
DistancePair arc_type(const Digraph& d, const DistancePairMatrix& m, Arc arc);

/// Out-valency of each arc type, common to every vertex.
struct ArcTypeCensus {
  std::map<DistancePair, int> valency;

  std::size_t type_count() const { return valency.size(); }
  int out_valency() const;
};

/// Throws Error(kNotTypeRegular) naming the first vertex whose typed
/// out-degrees differ from vertex 0.
ArcTypeCensus arc_type_census(const Digraph& d, const DistancePairMatrix& m);

/// The valency-1 and valency-2 arc types of an out-valency-3 digraph with
/// exactly two arc types: (1, q-1) and (1, g-1).
struct TwoArcTypes {
  DistancePair single;  // (1, q-1), valency 1
  DistancePair pair;    // (1, g-1), valency 2
  int q() const { return single.backward + 1; }
  int g() const { return pair.backward + 1; }
};

std::optional<TwoArcTypes> two_arc_types(const ArcTypeCensus& census);

}  // namespace wdrkit
