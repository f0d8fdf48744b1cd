#include "wdrkit/digraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "wdrkit/error.hpp"

namespace wdrkit {

Digraph Digraph::from_arcs(std::size_t vertex_count, std::span<const Arc> arcs) {
  if (vertex_count == 0) {
    throw Error(ErrorCode::kInvalidParameters, "digraph needs at least one vertex");
  }
  std::vector<Arc> sorted(arcs.begin(), arcs.end());
  for (const Arc& a : sorted) {
    if (a.tail >= vertex_count || a.head >= vertex_count) {
      throw Error(ErrorCode::kEndpointOutOfRange,
                  "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                      ") with n=" + std::to_string(vertex_count));
    }
    if (a.tail == a.head) {
      throw Error(ErrorCode::kLoop, "arc (" + std::to_string(a.tail) + "," +
                                        std::to_string(a.head) + ")");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Digraph d;
  d.vertex_count_ = vertex_count;
  d.out_offsets_.assign(vertex_count + 1, 0);
  d.in_offsets_.assign(vertex_count + 1, 0);
  for (const Arc& a : sorted) {
    ++d.out_offsets_[a.tail + 1];
    ++d.in_offsets_[a.head + 1];
  }
  std::partial_sum(d.out_offsets_.begin(), d.out_offsets_.end(), d.out_offsets_.begin());
  std::partial_sum(d.in_offsets_.begin(), d.in_offsets_.end(), d.in_offsets_.begin());

  d.out_targets_.resize(sorted.size());
  d.in_sources_.resize(sorted.size());
  std::vector<std::size_t> in_fill(d.in_offsets_.begin(), d.in_offsets_.end() - 1);
  for (std::size_t idx = 0; idx < sorted.size(); ++idx) {
    d.out_targets_[idx] = sorted[idx].head;
    d.in_sources_[in_fill[sorted[idx].head]++] = sorted[idx].tail;
  }
  // Sources arrive in tail order, so every in-list is already sorted.
  return d;
}

Digraph Digraph::with_metadata(std::vector<std::string> labels, std::string spec) && {
  if (!labels.empty() && labels.size() != vertex_count_) {
    throw Error(ErrorCode::kSizeMismatch, "label count differs from vertex count");
  }
  labels_ = std::move(labels);
  spec_ = std::move(spec);
  return std::move(*this);
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
  return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
  return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  if (tail >= vertex_count_ || head >= vertex_count_) return false;
  auto out = out_neighbors(tail);
  return std::binary_search(out.begin(), out.end(), head);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count());
  for (Vertex u = 0; u < vertex_count_; ++u) {
    for (Vertex v : out_neighbors(u)) result.push_back({u, v});
  }
  return result;
}

std::string Digraph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<int> bfs_distances(const Digraph& d, Vertex source) {
  std::vector<int> dist(d.vertex_count(), -1);
  std::vector<Vertex> queue;
  queue.reserve(d.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : d.out_neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

namespace {

bool reaches_all(const Digraph& d, bool forward) {
  std::vector<char> seen(d.vertex_count(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : forward ? d.out_neighbors(u) : d.in_neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == d.vertex_count();
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  if (d.vertex_count() == 0) return false;
  return reaches_all(d, true) && reaches_all(d, false);
}

Digraph relabel(const Digraph& d, std::span<const Vertex> perm) {
  if (perm.size() != d.vertex_count()) {
    throw Error(ErrorCode::kSizeMismatch, "permutation length differs from vertex count");
  }
  std::vector<bool> hit(perm.size(), false);
  for (Vertex v : perm) {
    if (v >= perm.size() || hit[v]) throw Error(ErrorCode::kInvalidParameters, "relabel needs a permutation");
    hit[v] = true;
  }
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) arcs.push_back({perm[a.tail], perm[a.head]});
  std::vector<std::string> labels;
  if (!d.labels().empty()) {
    labels.resize(d.vertex_count());
    for (Vertex v = 0; v < d.vertex_count(); ++v) labels[perm[v]] = d.labels()[v];
  }
  return Digraph::from_arcs(d.vertex_count(), arcs).with_metadata(std::move(labels), d.spec());
}

}  // namespace wdrkit
