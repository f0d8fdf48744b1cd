#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wdrkit/digraph.hpp"
#include "wdrkit/distance.hpp"
#include "wdrkit/scheme.hpp"

namespace wdrkit {

/// Blocks are listed by smallest member; each block is sorted.
struct VertexPartition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::size_t> block_of;

  std::size_t block_count() const { return blocks.size(); }
  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;
};

/// Connected components of the undirected graph joining x and y whenever
/// (x,y) lies in one of the generating relations (the diagonal is implicit).
/// Throws Error(kUnknownRelation).
VertexPartition equivalence_closure(const RelationPartition& part, std::span<const RelationId> generators);

/// Same closure for an explicit list of vertex pairs.
VertexPartition equivalence_closure(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> pairs);

/// Digraph on the blocks with an arc B1 -> B2 (B1 != B2) whenever some arc
/// of d runs from B1 into B2. Every arc of d has a type (1,s), so this is the
/// union of all the quotient classes of arcs. Block-internal arcs are dropped.
Digraph quotient_digraph(const Digraph& d, const RelationPartition& part, const VertexPartition& vp);

/// Length m when d is a directed cycle C_m. Two mutually joined vertices give
/// 2; a single vertex without arcs gives 1.
std::optional<int> is_circuit(const Digraph& d);

/// Exhaustive-enumeration limits; the cycle length cap can be overridden with
/// WDRKIT_CYCLE_CAP.
struct CycleLimits {
  int max_length = 12;
  std::size_t max_vertices = 200;

  static CycleLimits from_environment();
};

/// True iff every directed cycle of exactly `length` distinct vertices uses
/// arcs of a single type. Throws Error(kLimitExceeded) beyond the limits.
bool same_type_circuit_check(const Digraph& d, const DistancePairMatrix& m, int length,
                             CycleLimits limits = CycleLimits::from_environment());

/// Number of directed cycles of the given length (each counted once).
std::size_t count_cycles(const Digraph& d, int length, CycleLimits limits = CycleLimits::from_environment());

/// DOT for a quotient digraph with one `// block i: ...` comment per block.
std::string quotient_to_dot(const Digraph& quotient, const VertexPartition& vp);

}  // namespace wdrkit
