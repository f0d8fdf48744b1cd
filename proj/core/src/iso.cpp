#include "wdrkit/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wdrkit/error.hpp"

namespace wdrkit {

IsoCertificate IsoCertificate::inverse() const {
  IsoCertificate inv;
  inv.mapping.assign(mapping.size(), 0);
  for (Vertex v = 0; v < mapping.size(); ++v) inv.mapping.at(mapping[v]) = v;
  return inv;
}

bool verify_certificate(const Digraph& d1, const Digraph& d2, const IsoCertificate& c) {
  if (d1.vertex_count() != d2.vertex_count() || c.mapping.size() != d1.vertex_count()) {
    throw Error(ErrorCode::kSizeMismatch, "certificate and digraphs must have the same vertex count");
  }
  const std::size_t n = d1.vertex_count();
  std::vector<char> hit(n, 0);
  for (Vertex image : c.mapping) {
    if (image >= n || hit[image]) return false;
    hit[image] = 1;
  }
  // A bijection carrying every arc of d1 onto an arc of d2 preserves
  // non-arcs too once the arc counts agree.
  if (d1.arc_count() != d2.arc_count()) return false;
  for (const Arc& a : d1.arcs()) {
    if (!d2.has_arc(c.mapping[a.tail], c.mapping[a.head])) return false;
  }
  return true;
}

namespace {

struct Side {
  const Digraph* d;
  std::size_t n;
  std::vector<int> dist;  // row-major, -1 unreachable
  std::vector<int> color;

  int distance(Vertex x, Vertex y) const { return dist[x * n + y]; }
};

Side prepare(const Digraph& d) {
  Side side{&d, d.vertex_count(), {}, {}};
  side.dist.resize(side.n * side.n);
  for (Vertex x = 0; x < side.n; ++x) {
    const auto row = bfs_distances(d, x);
    std::copy(row.begin(), row.end(), side.dist.begin() + static_cast<std::ptrdiff_t>(x * side.n));
  }
  return side;
}

// Joint colour refinement so colours are comparable between the two sides.
// Returns false when the colour histograms differ.
bool refine(std::vector<Side*> sides) {
  using Signature = std::vector<long>;
  std::map<Signature, int> canon;
  for (Side* side : sides) {
    side->color.resize(side->n);
    for (Vertex x = 0; x < side->n; ++x) {
      std::vector<long> row;
      row.reserve(side->n);
      for (Vertex y = 0; y < side->n; ++y) {
        row.push_back(static_cast<long>(side->distance(x, y) + 1) * (static_cast<long>(side->n) + 2) +
                      (side->distance(y, x) + 1));
      }
      std::sort(row.begin(), row.end());
      row.insert(row.begin(), {static_cast<long>(side->d->out_degree(x)), static_cast<long>(side->d->in_degree(x))});
      auto [it, fresh] = canon.try_emplace(std::move(row), static_cast<int>(canon.size()));
      side->color[x] = it->second;
    }
  }

  std::size_t classes = canon.size();
  for (;;) {
    std::map<Signature, int> next;
    std::vector<std::vector<int>> fresh_colors;
    for (Side* side : sides) {
      std::vector<int> updated(side->n);
      for (Vertex x = 0; x < side->n; ++x) {
        Signature sig{side->color[x]};
        std::vector<long> outs, ins;
        for (Vertex w : side->d->out_neighbors(x)) outs.push_back(side->color[w]);
        for (Vertex w : side->d->in_neighbors(x)) ins.push_back(side->color[w]);
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        sig.insert(sig.end(), outs.begin(), outs.end());
        sig.push_back(-1);
        sig.insert(sig.end(), ins.begin(), ins.end());
        auto [it, fresh] = next.try_emplace(std::move(sig), static_cast<int>(next.size()));
        updated[x] = it->second;
      }
      fresh_colors.push_back(std::move(updated));
    }
    for (std::size_t idx = 0; idx < sides.size(); ++idx) sides[idx]->color = std::move(fresh_colors[idx]);
    if (next.size() == classes) break;
    classes = next.size();
  }

  if (sides.size() == 2) {
    std::vector<int> a = sides[0]->color, b = sides[1]->color;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }
  return true;
}

class Search {
 public:
  Search(const Side& a, const Side& b, std::vector<Vertex> order, std::optional<std::pair<Vertex, Vertex>> pin)
      : a_(a), b_(b), order_(std::move(order)), pin_(pin), image_(a.n, 0), used_(b.n, 0) {
    int max_color = 0;
    for (int c : b_.color) max_color = std::max(max_color, c);
    by_color_.resize(static_cast<std::size_t>(max_color) + 1);
    for (Vertex v = 0; v < b_.n; ++v) by_color_[b_.color[v]].push_back(v);
  }

  std::optional<IsoCertificate> run() {
    if (!extend(0)) return std::nullopt;
    return IsoCertificate{image_};
  }

 private:
  bool consistent(std::size_t depth, Vertex u, Vertex v) const {
    for (std::size_t pos = 0; pos < depth; ++pos) {
      const Vertex w = order_[pos];
      const Vertex wv = image_[w];
      if (a_.distance(u, w) != b_.distance(v, wv) || a_.distance(w, u) != b_.distance(wv, v)) return false;
    }
    return true;
  }

  bool try_candidate(std::size_t depth, Vertex u, Vertex v) {
    if (used_[v] || b_.color[v] != a_.color[u] || !consistent(depth, u, v)) return false;
    image_[u] = v;
    used_[v] = 1;
    if (extend(depth + 1)) return true;
    used_[v] = 0;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex u = order_[depth];
    if (depth == 0 && pin_) return try_candidate(depth, u, pin_->second);
    const auto color = static_cast<std::size_t>(a_.color[u]);
    if (color >= by_color_.size()) return false;
    for (Vertex v : by_color_[color]) {
      if (try_candidate(depth, u, v)) return true;
    }
    return false;
  }

  const Side& a_;
  const Side& b_;
  std::vector<Vertex> order_;
  std::optional<std::pair<Vertex, Vertex>> pin_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::vector<std::vector<Vertex>> by_color_;
};

std::vector<Vertex> search_order(const Side& side, std::optional<Vertex> first) {
  std::map<int, std::size_t> cell_size;
  for (int c : side.color) ++cell_size[c];
  std::vector<Vertex> order(side.n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
    return cell_size[side.color[x]] < cell_size[side.color[y]];
  });
  if (first) {
    order.erase(std::find(order.begin(), order.end(), *first));
    order.insert(order.begin(), *first);
  }
  return order;
}

std::optional<IsoCertificate> backtrack(Side& a, Side& b, std::optional<std::pair<Vertex, Vertex>> pin) {
  const auto order = search_order(a, pin ? std::optional<Vertex>(pin->first) : std::nullopt);
  Search s(a, b, order, pin);
  auto cert = s.run();
  if (cert && !verify_certificate(*a.d, *b.d, *cert)) {
    throw Error(ErrorCode::kInvalidParameters, "internal error: search produced an invalid certificate");
  }
  return cert;
}

}  // namespace

std::optional<IsoCertificate> find_isomorphism(const Digraph& d1, const Digraph& d2,
                                               std::optional<std::pair<Vertex, Vertex>> pin) {
  if (d1.vertex_count() != d2.vertex_count() || d1.arc_count() != d2.arc_count()) return std::nullopt;
  if (pin && (pin->first >= d1.vertex_count() || pin->second >= d2.vertex_count())) {
    throw Error(ErrorCode::kEndpointOutOfRange, "pinned vertex out of range");
  }
  Side a = prepare(d1);
  Side b = prepare(d2);
  if (!refine({&a, &b})) return std::nullopt;
  return backtrack(a, b, pin);
}

bool is_vertex_transitive(const Digraph& d) {
  const std::size_t n = d.vertex_count();
  if (n <= 1) return true;
  Side a = prepare(d);
  Side b = prepare(d);
  refine({&a, &b});
  if (std::any_of(a.color.begin(), a.color.end(), [&](int c) { return c != a.color[0]; })) return false;

  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Vertex v = 1; v < n; ++v) {
    if (find(v) == find(0)) continue;
    auto automorphism = backtrack(a, b, std::make_pair(Vertex{0}, v));
    if (!automorphism) return false;
    for (Vertex x = 0; x < n; ++x) {
      const Vertex rx = find(x), ry = find(automorphism->mapping[x]);
      if (rx != ry) parent[rx] = ry;
    }
  }
  return true;
}

}  // namespace wdrkit
