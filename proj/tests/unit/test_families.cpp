#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "wdrkit/error.hpp"
#include "wdrkit/families.hpp"
#include "wdrkit/iso.hpp"
#include "wdrkit/scheme.hpp"

using namespace wdrkit;

namespace {

// classification written out from the conditions, independent of classify_c123
Condition expected_condition(int q, int s, int k) {
  const int m = s / (2 * q);
  const int p = s - 2 * m * q;
  if (p == 0 && k == 1) return Condition::kC1;
  if ((p == 2 || p == q + 2) && k == q) return Condition::kC2;
  if (p >= 4 && p <= 2 * q - 2 && p % 2 == 0 && k == q + 1 - p / 2) return Condition::kC3;
  return Condition::kNone;
}

}  // namespace

TEST(Cayley, Examples) {
  const auto c5 = cayley({{5}, {{1}}});
  const auto arcs = oracle::directed_cycle_arcs(5);
  EXPECT_EQ(c5.arcs(), Digraph::from_arcs(5, arcs).arcs());

  const auto g3 = cayley({{4, 3}, {{1, 0}, {0, 1}, {2, 1}}});
  EXPECT_EQ(g3.vertex_count(), 12u);
  EXPECT_EQ(g3.arc_count(), 36u);
  EXPECT_EQ(g3.label(5), "(1,2)");

  const auto z24 = cayley({{24}, {{1}, {8}, {7}}});
  EXPECT_EQ(z24.vertex_count(), 24u);
  EXPECT_EQ(z24.arc_count(), 72u);
}

TEST(Cayley, Errors) {
  auto code = [](const CayleySpec& spec) {
    try {
      cayley(spec);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kParse;
  };
  EXPECT_EQ(code({{5}, {{0}, {1}}}), ErrorCode::kInvalidParameters);
  EXPECT_EQ(code({{5}, {{1}, {1}}}), ErrorCode::kInvalidParameters);
  EXPECT_EQ(code({{5}, {{1, 0}}}), ErrorCode::kInvalidParameters);
  EXPECT_EQ(code({{6}, {{2}}}), ErrorCode::kNotStronglyConnected);
  EXPECT_FALSE(generates({{6}, {{2}, {4}}}));
  EXPECT_TRUE(generates({{6}, {{2}, {3}}}));
}

TEST(GammaG, SizesAndRegularity) {
  EXPECT_TRUE(analyze(gamma_g(3)).is_wdr);
  EXPECT_FALSE(analyze(gamma_g(4)).is_wdr);
  EXPECT_TRUE(analyze(gamma_g(5)).is_wdr);
  for (int g = 3; g <= 8; ++g) {
    const auto d = gamma_g(g);
    EXPECT_EQ(d.vertex_count(), static_cast<std::size_t>(4 * g));
    EXPECT_EQ(d.arcs(), Digraph::from_arcs(4 * g, oracle::gamma_g_arcs(g)).arcs());
    for (Vertex v = 0; v < d.vertex_count(); ++v) EXPECT_EQ(d.out_degree(v), 3u);
  }
  EXPECT_THROW(gamma_g(2), Error);
}

TEST(GammaGDistance, ExamplesAndOracle) {
  EXPECT_EQ(gamma_g_distance(3, 1, 0), (DistancePair{1, 3}));
  EXPECT_EQ(gamma_g_distance(3, 0, 1), (DistancePair{1, 2}));
  EXPECT_EQ(gamma_g_distance(5, 1, 1), (DistancePair{2, 5}));
  EXPECT_THROW(gamma_g_distance(5, 0, 0), Error);
  for (int g = 3; g <= 12; ++g) {
    const auto d = gamma_g(g);
    const auto fw = oracle::floyd_warshall(d);
    const int n = 4 * g;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < g; ++b) {
        if (a == 0 && b == 0) continue;
        const int v = a * g + b;
        ASSERT_EQ(gamma_g_distance(g, a, b), (DistancePair{fw[v], fw[v * n]})) << g << " " << a << "," << b;
      }
  }
}

TEST(GammaQsk, RuleCountsAndDegrees) {
  for (auto [q, s, k] : {std::tuple{3, 6, 1}, {3, 8, 3}, {5, 3, 4}, {4, 13, 2}}) {
    const auto d = gamma_qsk(GammaQskParams::make(q, s, k));
    EXPECT_EQ(d.vertex_count(), static_cast<std::size_t>(q * s));
    EXPECT_EQ(d.arc_count(), static_cast<std::size_t>(3 * q * s));
    EXPECT_EQ(d.arcs(), Digraph::from_arcs(q * s, oracle::qsk_rule_arcs(q, s, k)).arcs());
    for (Vertex v = 0; v < d.vertex_count(); ++v) EXPECT_EQ(d.out_degree(v), 3u);
  }
}

TEST(GammaQsk, RejectsInvalidParameters) {
  EXPECT_THROW(GammaQskParams::make(2, 6, 1), Error);
  EXPECT_THROW(GammaQskParams::make(3, 2, 1), Error);
  EXPECT_THROW(GammaQskParams::make(5, 4, 2), Error);  // k >= q-s+2 = 3
  EXPECT_THROW(GammaQskParams::make(3, 6, 4), Error);
  EXPECT_FALSE(GammaQskParams::valid(3, 6, 0));
}

TEST(GammaQsk, DecompositionReproducesS) {
  for (auto t : oracle::sweep_box()) {
    const auto p = GammaQskParams::make(t.q, t.s, t.k);
    EXPECT_EQ(2 * p.m() * t.q + p.p(), t.s);
    EXPECT_GE(p.p(), 0);
    EXPECT_LT(p.p(), 2 * t.q);
  }
}

TEST(GammaQskDistance, Examples) {
  const auto p361 = GammaQskParams::make(3, 6, 1);
  EXPECT_EQ(gamma_qsk_distance(p361, 1, 1), (DistancePair{2, 2}));
  EXPECT_EQ(gamma_qsk_distance(p361, 0, 0), (DistancePair{0, 0}));
  const auto r = qsk_residues(p361, 1, 1);
  EXPECT_EQ(r.f, 2);
  EXPECT_EQ(r.g, 1);
  EXPECT_EQ(r.h, 2);
  // back from (0,1) runs (1,0), (2,0), (0,0)
  const auto p383 = GammaQskParams::make(3, 8, 3);
  const auto d = gamma_qsk(p383);
  const auto fw = oracle::floyd_warshall(d);
  EXPECT_EQ(gamma_qsk_distance(p383, 0, 1), (DistancePair{fw[1], fw[1 * 24]}));
  EXPECT_EQ(gamma_qsk_distance(p383, 0, 1), (DistancePair{1, 3}));
}

TEST(GammaQskDistance, AgreesWithBfsOnSweepBox) {
  for (auto t : oracle::sweep_box()) {
    const auto params = GammaQskParams::make(t.q, t.s, t.k);
    const auto d = gamma_qsk(params);
    const auto m = distance_pairs(d);
    for (int a = 0; a < t.q; ++a)
      for (int b = 0; b < t.s; ++b)
        ASSERT_EQ(gamma_qsk_distance(params, a, b), m.at(0, params.vertex(a, b)))
            << params.spec() << " at (" << a << "," << b << ")";
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_c123(GammaQskParams::make(3, 6, 1)), Condition::kC1);
  EXPECT_EQ(classify_c123(GammaQskParams::make(3, 8, 3)), Condition::kC2);
  EXPECT_EQ(classify_c123(GammaQskParams::make(3, 4, 2)), Condition::kC3);
  EXPECT_EQ(classify_c123(GammaQskParams::make(3, 7, 3)), Condition::kNone);
}

TEST(Classify, MatchesWrittenConditionsAndIsExclusive) {
  int counts[4] = {0, 0, 0, 0};
  for (auto t : oracle::sweep_box()) {
    const auto c = classify_c123(GammaQskParams::make(t.q, t.s, t.k));
    EXPECT_EQ(c, expected_condition(t.q, t.s, t.k));
    ++counts[static_cast<int>(c)];
  }
  EXPECT_EQ(counts[static_cast<int>(Condition::kC1)], 7);
  EXPECT_EQ(counts[static_cast<int>(Condition::kC2)], 13);
  EXPECT_EQ(counts[static_cast<int>(Condition::kC3)], 14);
  EXPECT_EQ(counts[static_cast<int>(Condition::kNone)], 172);
}

TEST(VertexTransitivity, ExplicitTranslationsAreAutomorphisms) {
  for (auto t : oracle::sweep_box()) {
    if (t.s > 9) continue;
    const auto params = GammaQskParams::make(t.q, t.s, t.k);
    const auto d = gamma_qsk(params);
    for (int a = 0; a < t.q; ++a)
      for (int b = 0; b < t.s; ++b) {
        const auto sigma = qsk_translation(params, a, b);
        EXPECT_EQ(sigma[0], params.vertex(a, b));
        EXPECT_TRUE(verify_certificate(d, d, IsoCertificate{sigma})) << params.spec() << " " << a << "," << b;
      }
  }
}

TEST(ClassificationFamilies, Bounds) {
  EXPECT_TRUE(theorem_families(11).empty());
  const auto twelve = theorem_families(12);
  ASSERT_FALSE(twelve.empty());
  bool has_gamma3 = false;
  for (const auto& m : twelve) {
    has_gamma3 = has_gamma3 || m.label == "gamma-g:g=3" ||
                 std::find(m.aliases.begin(), m.aliases.end(), "gamma-g:g=3") != m.aliases.end();
  }
  EXPECT_TRUE(has_gamma3);
  const auto eighteen = theorem_families(18);
  bool has_361 = false;
  for (const auto& m : eighteen) {
    has_361 = has_361 || m.label == "gamma-qsk:q=3,s=6,k=1" ||
              std::find(m.aliases.begin(), m.aliases.end(), "gamma-qsk:q=3,s=6,k=1") != m.aliases.end();
  }
  EXPECT_TRUE(has_361);
}

TEST(ClassificationFamilies, MembersAreTwoTypeWdrAndPairwiseDistinct) {
  const auto members = theorem_families(40);
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& d = members[i].digraph;
    const auto m = distance_pairs(d);
    const auto report = analyze(d);
    EXPECT_TRUE(report.is_wdr) << members[i].label;
    EXPECT_GT(girth(d, m), 2);
    EXPECT_EQ(arc_type_census(d, m).type_count(), 2u);
    for (Vertex v = 0; v < d.vertex_count(); ++v) EXPECT_EQ(d.out_degree(v), 3u);
    if (i > 0) EXPECT_LE(members[i - 1].digraph.vertex_count(), d.vertex_count());
    for (std::size_t j = 0; j < i; ++j) {
      if (members[j].digraph.vertex_count() == d.vertex_count()) {
        EXPECT_FALSE(are_isomorphic(members[j].digraph, d)) << members[j].label << " vs " << members[i].label;
      }
    }
  }
}

TEST(CayleyTarget, Examples) {
  {
    const auto params = GammaQskParams::make(3, 8, 3);
    const auto t = cayley_iso_target(params);
    EXPECT_EQ(t.condition, Condition::kC2);
    EXPECT_EQ(t.spec.moduli, (std::vector<int>{24}));
    std::set<GroupElement> set(t.spec.connection_set.begin(), t.spec.connection_set.end());
    EXPECT_EQ(set, (std::set<GroupElement>{{1}, {8}, {7}}));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 8; ++b) EXPECT_EQ(t.map.mapping[params.vertex(a, b)], static_cast<Vertex>(8 * a + b));
  }
  {
    const auto t = cayley_iso_target(GammaQskParams::make(3, 6, 1));
    EXPECT_EQ(t.condition, Condition::kC1);
    EXPECT_EQ(t.spec.moduli, (std::vector<int>{3, 6}));
    std::set<GroupElement> set(t.spec.connection_set.begin(), t.spec.connection_set.end());
    EXPECT_EQ(set, (std::set<GroupElement>{{1, 0}, {0, 1}, {1, 5}}));
  }
  {
    const auto t = cayley_iso_target(GammaQskParams::make(3, 4, 2));
    EXPECT_EQ(t.condition, Condition::kC3);
    EXPECT_EQ(t.parameters.d_twice, 4);
    EXPECT_EQ(t.parameters.l, 0);
    EXPECT_EQ(t.parameters.h, 4);
    EXPECT_EQ(t.parameters.i, 0);
    EXPECT_EQ(t.parameters.u, 1);
  }
  EXPECT_THROW(cayley_iso_target(GammaQskParams::make(3, 7, 3)), Error);
}

TEST(CayleyTarget, VerifiesOnSweepBox) {
  for (auto t : oracle::sweep_box()) {
    const auto params = GammaQskParams::make(t.q, t.s, t.k);
    if (classify_c123(params) == Condition::kNone) continue;
    const auto result = verify_iso(params);
    EXPECT_TRUE(result.explicit_map_ok) << params.spec();
    EXPECT_TRUE(result.search_ok) << params.spec();
  }
}

TEST(CayleyTarget, AnyAdmissibleUWorks) {
  for (auto t : oracle::sweep_box()) {
    const auto params = GammaQskParams::make(t.q, t.s, t.k);
    if (classify_c123(params) != Condition::kC3) continue;
    const int u0 = least_admissible_u(params);
    const int period = admissible_u_period(params);
    const int g = std::gcd(t.q, params.p());
    const int modulus = (params.p() / g % 2 == 0 ? 1 : 2) * t.q;
    EXPECT_EQ(((u0 * params.p() - g) % modulus + modulus) % modulus, 0);
    EXPECT_TRUE(verify_iso(params, u0 + period).explicit_map_ok) << params.spec();
    if (period > 1) EXPECT_THROW(cayley_iso_target(params, u0 + 1), Error) << params.spec();
  }
}

TEST(CounterexampleProbe, Cases) {
  EXPECT_EQ(counterexample_probe(GammaQskParams::make(3, 7, 3)).case_number, 4);
  EXPECT_EQ(counterexample_probe(GammaQskParams::make(4, 9, 4)).case_number, 4);
  const int c = counterexample_probe(GammaQskParams::make(3, 8, 1)).case_number;
  EXPECT_TRUE(c == 1 || c == 2);
  EXPECT_THROW(counterexample_probe(GammaQskParams::make(3, 6, 1)), Error);
}

TEST(CounterexampleProbe, ConfirmedOnEveryNoneTuple) {
  int per_case[5] = {0, 0, 0, 0, 0};
  for (auto t : oracle::sweep_box()) {
    const auto params = GammaQskParams::make(t.q, t.s, t.k);
    if (classify_c123(params) != Condition::kNone) continue;
    const auto probe = counterexample_probe(params);
    const auto d = gamma_qsk(params);
    const auto part = RelationPartition::build(distance_pairs(d));
    const auto check = check_probe(params, probe, part);
    EXPECT_TRUE(check.ok) << params.spec();
    EXPECT_EQ(check.to_x, check.to_y);
    EXPECT_NE(check.count_x, check.count_y);
    EXPECT_FALSE(analyze(d).is_wdr);
    ++per_case[probe.case_number];
  }
  EXPECT_EQ(per_case[1] + per_case[2] + per_case[3] + per_case[4], 172);
}
