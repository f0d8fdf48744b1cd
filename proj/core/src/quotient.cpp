#include "wdrkit/quotient.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "wdrkit/dot.hpp"
#include "wdrkit/error.hpp"

namespace wdrkit {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }

  Vertex find(Vertex v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

  VertexPartition partition() {
    const std::size_t n = parent_.size();
    VertexPartition vp;
    vp.block_of.assign(n, 0);
    std::vector<std::size_t> block_of_root(n, n);
    for (Vertex v = 0; v < n; ++v) {
      const Vertex root = find(v);
      if (block_of_root[root] == n) {
        block_of_root[root] = vp.blocks.size();
        vp.blocks.emplace_back();
      }
      vp.block_of[v] = block_of_root[root];
      vp.blocks[block_of_root[root]].push_back(v);
    }
    return vp;
  }

 private:
  std::vector<Vertex> parent_;
};

}  // namespace

VertexPartition equivalence_closure(const RelationPartition& part, std::span<const RelationId> generators) {
  std::vector<char> in_gen(part.relation_count(), 0);
  for (RelationId id : generators) {
    if (id >= part.relation_count()) throw Error(ErrorCode::kUnknownRelation, "relation id " + std::to_string(id));
    in_gen[id] = 1;
  }
  const std::size_t n = part.vertex_count();
  UnionFind uf(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (in_gen[part.class_of(x, y)]) uf.unite(x, y);
    }
  }
  return uf.partition();
}

VertexPartition equivalence_closure(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> pairs) {
  UnionFind uf(vertex_count);
  for (const auto& [x, y] : pairs) {
    if (x >= vertex_count || y >= vertex_count) throw Error(ErrorCode::kEndpointOutOfRange, "pair endpoint");
    uf.unite(x, y);
  }
  return uf.partition();
}

Digraph quotient_digraph(const Digraph& d, const RelationPartition& part, const VertexPartition& vp) {
  if (part.vertex_count() != d.vertex_count() || vp.block_of.size() != d.vertex_count()) {
    throw Error(ErrorCode::kSizeMismatch, "partition does not belong to this digraph");
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    const auto from = static_cast<Vertex>(vp.block_of[a.tail]);
    const auto to = static_cast<Vertex>(vp.block_of[a.head]);
    if (from != to) arcs.push_back({from, to});
  }
  std::vector<std::string> labels;
  for (const auto& block : vp.blocks) labels.push_back("[" + d.label(block.front()) + "]");
  return Digraph::from_arcs(vp.block_count(), arcs).with_metadata(std::move(labels), d.spec().empty() ? "" : d.spec() + "/F");
}

std::optional<int> is_circuit(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n == 1) return d.arc_count() == 0 ? std::optional<int>(1) : std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return std::nullopt;
  }
  // Functional digraph with in = out = 1: a single cycle iff following
  // successors from 0 returns after n steps.
  Vertex v = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    v = d.out_neighbors(v)[0];
    if (v == 0) return step == n ? std::optional<int>(static_cast<int>(n)) : std::nullopt;
  }
  return std::nullopt;
}

CycleLimits CycleLimits::from_environment() {
  CycleLimits limits;
  if (const char* cap = std::getenv("WDRKIT_CYCLE_CAP")) {
    char* end = nullptr;
    const long value = std::strtol(cap, &end, 10);
    if (end != cap && *end == '\0' && value > 0) limits.max_length = static_cast<int>(value);
  }
  return limits;
}

namespace {

void check_limits(const Digraph& d, int length, const CycleLimits& limits) {
  if (length < 2) throw Error(ErrorCode::kInvalidParameters, "cycle length must be at least 2");
  if (length > limits.max_length) {
    throw Error(ErrorCode::kLimitExceeded, "cycle length " + std::to_string(length) + " exceeds cap " +
                                               std::to_string(limits.max_length) + " (WDRKIT_CYCLE_CAP)");
  }
  if (d.vertex_count() > limits.max_vertices) {
    throw Error(ErrorCode::kLimitExceeded, std::to_string(d.vertex_count()) + " vertices exceed cycle-enumeration cap " +
                                               std::to_string(limits.max_vertices));
  }
}

// Enumerates each cycle of the given length once, rooted at its smallest
// vertex. The visitor gets the vertex sequence and returns false to stop.
template <class Visitor>
bool for_each_cycle(const Digraph& d, int length, Visitor&& visit) {
  std::vector<Vertex> path;
  std::vector<char> on_path(d.vertex_count(), 0);
  auto dfs = [&](auto&& self, Vertex root, Vertex u) -> bool {
    if (static_cast<int>(path.size()) == length) {
      return d.has_arc(u, root) ? visit(std::span<const Vertex>(path)) : true;
    }
    for (Vertex v : d.out_neighbors(u)) {
      if (v <= root || on_path[v]) continue;
      on_path[v] = 1;
      path.push_back(v);
      const bool go_on = self(self, root, v);
      path.pop_back();
      on_path[v] = 0;
      if (!go_on) return false;
    }
    return true;
  };
  for (Vertex root = 0; root < d.vertex_count(); ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    const bool go_on = dfs(dfs, root, root);
    on_path[root] = 0;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

bool same_type_circuit_check(const Digraph& d, const DistancePairMatrix& m, int length, CycleLimits limits) {
  check_limits(d, length, limits);
  return for_each_cycle(d, length, [&](std::span<const Vertex> cycle) {
    const auto type_of = [&](std::size_t idx) {
      const Vertex u = cycle[idx], v = cycle[(idx + 1) % cycle.size()];
      return m.distance(v, u);
    };
    const int first = type_of(0);
    for (std::size_t idx = 1; idx < cycle.size(); ++idx) {
      if (type_of(idx) != first) return false;
    }
    return true;
  });
}

std::size_t count_cycles(const Digraph& d, int length, CycleLimits limits) {
  check_limits(d, length, limits);
  std::size_t count = 0;
  for_each_cycle(d, length, [&](std::span<const Vertex>) {
    ++count;
    return true;
  });
  return count;
}

std::string quotient_to_dot(const Digraph& quotient, const VertexPartition& vp) {
  std::vector<std::string> comments;
  for (std::size_t b = 0; b < vp.block_count(); ++b) {
    std::string line = "block " + std::to_string(b) + ":";
    for (Vertex v : vp.blocks[b]) line += " " + std::to_string(v);
    comments.push_back(std::move(line));
  }
  if (is_strongly_connected(quotient) && quotient.arc_count() > 0) {
    return to_dot(quotient, distance_pairs(quotient), comments);
  }
  return to_dot_untyped(quotient, comments);
}

}  // namespace wdrkit
