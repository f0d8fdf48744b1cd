#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's distance, scheme or cycle code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "wdrkit/digraph.hpp"

namespace oracle {

using wdrkit::Arc;
using wdrkit::Vertex;

constexpr int kInf = 1 << 28;

/// All-pairs shortest directed path lengths; kInf when unreachable.
inline std::vector<int> floyd_warshall(std::size_t n, const std::vector<Arc>& arcs) {
  std::vector<int> d(n * n, kInf);
  for (std::size_t v = 0; v < n; ++v) d[v * n + v] = 0;
  for (auto a : arcs) d[a.tail * n + a.head] = std::min(d[a.tail * n + a.head], 1);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i * n + k] + d[k * n + j] < d[i * n + j]) d[i * n + j] = d[i * n + k] + d[k * n + j];
  return d;
}

inline std::vector<int> floyd_warshall(const wdrkit::Digraph& g) { return floyd_warshall(g.vertex_count(), g.arcs()); }

using Pair = std::pair<int, int>;

/// Naive recount of every |P_{i,j}(x,y)| over all (x,y,z). Returns whether the
/// counts are constant on classes and, if so, the map (h,i,j) -> p over
/// nonzero entries.
struct NaiveWdr {
  bool is_wdr = false;
  std::map<std::tuple<Pair, Pair, Pair>, int> p;
  std::map<Pair, int> valency;
};

inline NaiveWdr naive_wdr(const wdrkit::Digraph& g) {
  const std::size_t n = g.vertex_count();
  const auto d = floyd_warshall(g);
  auto tw = [&](std::size_t x, std::size_t y) { return Pair{d[x * n + y], d[y * n + x]}; };
  NaiveWdr out;
  std::map<std::tuple<Pair, Pair, Pair>, int> seen;
  std::map<Pair, std::set<std::pair<Pair, Pair>>> support;  // per class h, the (i,j) seen anywhere
  // counts per pair
  std::vector<std::map<std::pair<Pair, Pair>, int>> counts(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        ++counts[x * n + y][{tw(x, z), tw(z, y)}];
        support[tw(x, y)].insert({tw(x, z), tw(z, y)});
      }
  out.is_wdr = true;
  std::map<Pair, std::size_t> first;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Pair h = tw(x, y);
      auto [it, fresh] = first.emplace(h, x * n + y);
      for (const auto& ij : support[h]) {
        const auto& mine = counts[x * n + y];
        const auto& ref = counts[it->second];
        const int a = mine.contains(ij) ? mine.at(ij) : 0;
        const int b = ref.contains(ij) ? ref.at(ij) : 0;
        if (a != b) out.is_wdr = false;
        if (fresh && a != 0) out.p[{h, ij.first, ij.second}] = a;
      }
    }
  for (std::size_t y = 0; y < n; ++y) ++out.valency[tw(0, y)];
  return out;
}

/// Directed cycles of the given length with distinct vertices, counted by
/// brute-force extension from every start and divided by the rotations.
inline std::size_t brute_cycle_count(const wdrkit::Digraph& g, int length) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto a : g.arcs()) adj[a.tail][a.head] = true;
  std::size_t closed = 0;
  std::vector<Vertex> path;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, Vertex v) -> void {
    if (static_cast<int>(path.size()) == length) {
      if (adj[v][path.front()]) ++closed;
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (!adj[v][w] || used[w]) continue;
      used[w] = true;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      used[w] = false;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    used[s] = true;
    path = {s};
    rec(rec, s);
    used[s] = false;
  }
  return closed / static_cast<std::size_t>(length);
}

inline int mod(int a, int m) { return ((a % m) + m) % m; }

/// Arc list of Γ_{q,s,k} written directly from the five arc rules, with
/// vertex (a,b) numbered a*s+b.
inline std::vector<Arc> qsk_rule_arcs(int q, int s, int k) {
  std::set<Arc> arcs;
  auto id = [&](int a, int b) { return static_cast<Vertex>(mod(a, q) * s + mod(b, s)); };
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < s; ++b) {
      arcs.insert({id(a, b), id(a + 1, b)});
      if (b != s - 1) arcs.insert({id(a, b), id(a, b + 1)});
      if (b != 0) arcs.insert({id(a, b), id(a + 1, b - 1)});
      if (b == s - 1) arcs.insert({id(a, b), id(a - k + 1, 0)});
      if (b == 0) arcs.insert({id(a, b), id(a + k, s - 1)});
    }
  return {arcs.begin(), arcs.end()};
}

/// Arcs of Cay(Z_4 x Z_g, {(1,0),(0,1),(2,1)}), vertex (a,b) numbered a*g+b.
inline std::vector<Arc> gamma_g_arcs(int g) {
  std::vector<Arc> arcs;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < g; ++b) {
      const Vertex v = static_cast<Vertex>(a * g + b);
      for (auto [da, db] : {Pair{1, 0}, Pair{0, 1}, Pair{2, 1}})
        arcs.push_back({v, static_cast<Vertex>(mod(a + da, 4) * g + mod(b + db, g))});
    }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

inline std::vector<Arc> directed_cycle_arcs(Vertex n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  return arcs;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Tuples of the standard sweep box: q in 3..5, s in 3..20, all valid k.
struct Qsk {
  int q, s, k;
};

inline std::vector<Qsk> sweep_box() {
  std::vector<Qsk> out;
  for (int q = 3; q <= 5; ++q)
    for (int s = 3; s <= 20; ++s)
      for (int k = std::max(1, q - s + 2); k <= q; ++k) out.push_back({q, s, k});
  return out;
}

}  // namespace oracle
