#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wdrkit {

using Vertex = std::uint32_t;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Finite loop-free digraph on vertices 0..n-1, stored as sorted out- and
/// in-adjacency arrays. Immutable once built.
///
/// Vertex labels (e.g. group elements) and the construction spec string are
/// metadata only; no algorithm looks at them.
class Digraph {
 public:
  Digraph() = default;

  /// Throws Error(kLoop) on (u,u) and Error(kEndpointOutOfRange) on a bad
  /// endpoint. Duplicate arcs collapse.
  static Digraph from_arcs(std::size_t vertex_count, std::span<const Arc> arcs);

  Digraph with_metadata(std::vector<std::string> labels, std::string spec) &&;

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t arc_count() const noexcept { return out_targets_.size(); }

  std::span<const Vertex> out_neighbors(Vertex v) const;
  std::span<const Vertex> in_neighbors(Vertex v) const;
  std::size_t out_degree(Vertex v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_neighbors(v).size(); }

  bool has_arc(Vertex tail, Vertex head) const;

  /// All arcs sorted by (tail, head).
  std::vector<Arc> arcs() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Label of v, or its decimal id when no labels are attached.
  std::string label(Vertex v) const;
  const std::string& spec() const noexcept { return spec_; }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Vertex> in_sources_;
  std::vector<std::string> labels_;
  std::string spec_;
};

/// Unweighted single-source distances; -1 marks an unreachable vertex.
std::vector<int> bfs_distances(const Digraph& d, Vertex source);

bool is_strongly_connected(const Digraph& d);

/// Same digraph with vertex v renamed to perm[v]. Labels follow their vertex.
/// Throws Error(kSizeMismatch) or Error(kInvalidParameters) for a bad perm.
Digraph relabel(const Digraph& d, std::span<const Vertex> perm);

}  // namespace wdrkit
