#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wdrkit/error.hpp"
#include "wdrkit/families.hpp"
#include "wdrkit/iso.hpp"

using namespace wdrkit;

namespace {

Digraph cycle(Vertex n) {
  const auto arcs = oracle::directed_cycle_arcs(n);
  return Digraph::from_arcs(n, arcs);
}

IsoCertificate identity(std::size_t n) {
  IsoCertificate c;
  c.mapping.resize(n);
  std::iota(c.mapping.begin(), c.mapping.end(), Vertex{0});
  return c;
}

}  // namespace

TEST(VerifyCertificate, Examples) {
  const auto d = gamma_g(5);
  EXPECT_TRUE(verify_certificate(d, d, identity(d.vertex_count())));

  const auto params = GammaQskParams::make(3, 8, 3);
  IsoCertificate sigma;
  sigma.mapping.resize(24);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 8; ++b) sigma.mapping[params.vertex(a, b)] = static_cast<Vertex>(8 * a + b);
  EXPECT_TRUE(verify_certificate(gamma_qsk(params), cayley({{24}, {{1}, {8}, {7}}}), sigma));

  const auto c3 = cycle(3);
  EXPECT_FALSE(verify_certificate(c3, c3, IsoCertificate{{1, 0, 2}}));
}

TEST(VerifyCertificate, RejectsNonBijectionAndSizeMismatch) {
  const auto c3 = cycle(3);
  EXPECT_FALSE(verify_certificate(c3, c3, IsoCertificate{{0, 0, 1}}));
  EXPECT_THROW(verify_certificate(c3, cycle(4), identity(3)), Error);
  EXPECT_THROW(verify_certificate(c3, c3, identity(4)), Error);
}

TEST(AreIsomorphic, Examples) {
  const auto c = are_isomorphic(gamma_qsk(GammaQskParams::make(3, 6, 1)), cayley({{3, 6}, {{1, 0}, {0, 1}, {1, 5}}}));
  EXPECT_TRUE(c);
  EXPECT_TRUE(are_isomorphic(cycle(6), cayley({{6}, {{1}}})));
  EXPECT_FALSE(are_isomorphic(gamma_g(3), gamma_qsk(GammaQskParams::make(3, 4, 2))));
}

TEST(AreIsomorphic, RelationClassSizesDifferForGamma3VersusQsk342) {
  // oracle reason behind the negative example above
  auto sizes = [](const Digraph& d) {
    const auto fw = oracle::floyd_warshall(d);
    const std::size_t n = d.vertex_count();
    std::map<oracle::Pair, int> count;
    for (std::size_t y = 0; y < n; ++y) ++count[{fw[y], fw[y * n]}];
    std::multiset<int> out;
    for (auto& [_, c] : count) out.insert(c);
    return std::pair{count.size(), out};
  };
  EXPECT_NE(sizes(gamma_g(3)), sizes(gamma_qsk(GammaQskParams::make(3, 4, 2))));
}

TEST(AreIsomorphic, DifferentSizesOrArcCounts) {
  EXPECT_FALSE(are_isomorphic(cycle(5), cycle(6)));
  const std::vector<Arc> extra{{0, 1}, {1, 2}, {2, 0}, {0, 2}};
  EXPECT_FALSE(are_isomorphic(cycle(3), Digraph::from_arcs(3, extra)));
}

TEST(AreIsomorphic, ShuffleRoundTrips) {
  std::mt19937 rng(2024);
  const std::vector<Digraph> cases{gamma_g(3), gamma_g(4), gamma_qsk(GammaQskParams::make(3, 6, 1)),
                                   gamma_qsk(GammaQskParams::make(4, 7, 3)), cycle(9)};
  for (const auto& d : cases) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto perm = oracle::random_permutation(d.vertex_count(), rng);
      const auto shuffled = relabel(d, perm);
      const auto forward = are_isomorphic(d, shuffled);
      ASSERT_TRUE(forward) << d.spec();
      EXPECT_TRUE(verify_certificate(d, shuffled, *forward));
      const auto backward = are_isomorphic(shuffled, d);
      ASSERT_TRUE(backward);
      EXPECT_TRUE(verify_certificate(shuffled, d, forward->inverse()));
    }
  }
}

TEST(AreIsomorphic, PinnedSearch) {
  const auto d = gamma_g(5);
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    const auto c = find_isomorphism(d, d, std::pair{Vertex{0}, v});
    ASSERT_TRUE(c);
    EXPECT_EQ(c->mapping[0], v);
  }
}

TEST(VertexTransitive, Examples) {
  EXPECT_TRUE(is_vertex_transitive(gamma_qsk(GammaQskParams::make(3, 6, 1))));
  EXPECT_TRUE(is_vertex_transitive(gamma_g(5)));
  // 4-cycle with a chord: vertex 0 has out-degree 2
  const std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}};
  EXPECT_FALSE(is_vertex_transitive(Digraph::from_arcs(4, arcs)));
}

TEST(VertexTransitive, AgreesWithBruteForceOnSixVertices) {
  // two directed triangles joined by a 2-regular set of cross arcs
  const std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                              {0, 3}, {1, 5}, {2, 4}, {3, 1}, {4, 0}, {5, 2}};
  const auto d = Digraph::from_arcs(6, arcs);
  // decide by brute force over all 720 permutations
  std::vector<Vertex> perm(6);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::set<Vertex> orbit;
  do {
    if (verify_certificate(d, d, IsoCertificate{perm})) orbit.insert(perm[0]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(is_vertex_transitive(d), orbit.size() == 6);
}

TEST(VertexTransitive, AllSmallSweepInstances) {
  for (auto t : oracle::sweep_box()) {
    if (t.s > 8) continue;
    EXPECT_TRUE(is_vertex_transitive(gamma_qsk(GammaQskParams::make(t.q, t.s, t.k)))) << t.q << "," << t.s << "," << t.k;
  }
}
