#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wdrkit/census.hpp"
#include "wdrkit/error.hpp"
#include "wdrkit/json_io.hpp"
#include "wdrkit/sweep.hpp"

using namespace wdrkit;

TEST(Ranges, Parse) {
  EXPECT_EQ(parse_range("3..12").lo, 3);
  EXPECT_EQ(parse_range("3..12").hi, 12);
  EXPECT_EQ(parse_range("3-12").hi, 12);
  EXPECT_EQ(parse_range("7").size(), 1);
  EXPECT_TRUE(parse_range("5..4").empty());
  EXPECT_THROW(parse_range("a..b"), Error);
  EXPECT_EQ(parse_law("prop2.1"), Law::kGammaG);
  EXPECT_THROW(parse_law("prop3"), Error);
}

TEST(Sweep, SmallQskBoxAgrees) {
  SweepSpec spec;
  spec.q = {3, 3};
  spec.s = {3, 12};
  spec.k = {1, 3};
  const auto result = run_sweep(spec);
  EXPECT_FALSE(result.first_disagreement());
  std::size_t expected = 0;
  for (int s = 3; s <= 12; ++s) expected += static_cast<std::size_t>(3 - std::max(1, 3 - s + 2) + 1);
  EXPECT_EQ(result.rows.size(), expected);
}

TEST(Sweep, GammaGHasOnlyGammaFourFailing) {
  SweepSpec spec;
  spec.law = Law::kGammaG;
  spec.g = {3, 10};
  const auto result = run_sweep(spec);
  EXPECT_FALSE(result.first_disagreement());
  std::vector<int> failing;
  for (const auto& row : result.rows)
    if (!row.is_wdr) failing.push_back(row.g);
  EXPECT_EQ(failing, (std::vector<int>{4}));
}

TEST(Sweep, EmptyValidIntersection) {
  SweepSpec spec;
  spec.q = {5, 5};
  spec.s = {3, 3};
  spec.k = {1, 3};  // s=3 needs k >= 4
  EXPECT_TRUE(sweep_tuples(spec).empty());
  EXPECT_TRUE(run_sweep(spec).rows.empty());
}

TEST(Sweep, Errors) {
  SweepSpec spec;
  spec.q = {2, 4};
  EXPECT_THROW(sweep_tuples(spec), Error);
  spec.q = {3, 200};
  spec.s = {3, 200};
  try {
    sweep_tuples(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLimitExceeded);
  }
}

TEST(Sweep, ParallelMatchesSerial) {
  SweepSpec spec;
  spec.q = {3, 4};
  spec.s = {3, 12};
  const auto serial = run_sweep(spec);
  spec.jobs = 4;
  const auto parallel = run_sweep(spec);
  EXPECT_EQ(sweep_to_json(spec, serial).dump(), sweep_to_json(spec, parallel).dump());
}

TEST(AbelianShapes, KnownCounts) {
  // number of abelian groups of order n
  const std::map<int, std::size_t> expected{{1, 1}, {4, 2}, {8, 3}, {12, 2}, {16, 5}, {24, 3}, {32, 7}, {36, 4}, {30, 1}};
  for (auto [n, count] : expected) EXPECT_EQ(abelian_group_shapes(n).size(), count) << n;
  EXPECT_EQ(abelian_group_shapes(12), (std::vector<std::vector<int>>{{2, 6}, {12}}));
  for (int n = 2; n <= 64; ++n) {
    for (const auto& shape : abelian_group_shapes(n)) {
      int prod = 1;
      for (std::size_t i = 0; i < shape.size(); ++i) {
        prod *= shape[i];
        EXPECT_GT(shape[i], 1);
        if (i + 1 < shape.size()) EXPECT_EQ(shape[i + 1] % shape[i], 0);
      }
      EXPECT_EQ(prod, n);
    }
  }
}

TEST(Census, BelowTwelveIsEmpty) {
  CensusSpec spec;
  spec.max_order = 11;
  const auto result = run_census(spec);
  EXPECT_TRUE(result.hits.empty());
  EXPECT_GT(result.counts.subsets, 0);
}

TEST(Census, OrderTwelveFindsGammaThree) {
  CensusSpec spec;
  spec.max_order = 12;
  const auto result = run_census(spec);
  EXPECT_EQ(result.unmatched(), 0u);
  const auto gamma3 = cayley({{4, 3}, {{1, 0}, {0, 1}, {2, 1}}});
  bool found = false;
  for (const auto& hit : result.hits) {
    if (are_isomorphic(hit.digraph, gamma3)) {
      found = true;
      EXPECT_EQ(hit.matched, "gamma-g:g=3");
    }
  }
  EXPECT_TRUE(found);
}

TEST(Census, OrderTwentyFourAllMatchedAndDeterministic) {
  CensusSpec spec;
  spec.max_order = 24;
  const auto serial = run_census(spec);
  EXPECT_EQ(serial.unmatched(), 0u);
  spec.jobs = 3;
  const auto parallel = run_census(spec);
  EXPECT_EQ(census_to_json(serial).dump(), census_to_json(parallel).dump());
  std::int64_t folded = 0;
  for (const auto& hit : serial.hits) folded += hit.multiplicity;
  EXPECT_EQ(folded, serial.counts.raw_hits);
}

TEST(Census, CapEnforced) {
  CensusSpec spec;
  spec.max_order = 40;
  EXPECT_THROW(run_census(spec), Error);
}
