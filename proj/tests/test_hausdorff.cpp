// Copyright 2026 The Choquet Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "choquet/generators.hpp"
#include "choquet/hausdorff.hpp"
#include "oracles.hpp"

namespace choquet {
namespace {

const Rational kHalf = make_rational(1, 2);

TEST(DyadicPowerSum, ExactArithmetic) {
  const Rational beta = kHalf;
  // 2^{-1/2} squared is 1/2; here: 2 * 2^{-1} = 1 and 2^{-1/2} + 2^{-1/2} = 2^{1/2}.
  EXPECT_EQ(DyadicPowerSum::power(2, beta), DyadicPowerSum(kHalf));
  EXPECT_EQ(DyadicPowerSum::power(1, beta) * Rational(2), DyadicPowerSum::power(-1, beta));
  EXPECT_EQ(DyadicPowerSum::power(1, beta).times_power(1, beta), DyadicPowerSum(kHalf));
  EXPECT_LT(DyadicPowerSum::power(1, beta), DyadicPowerSum(make_rational(71, 100)));
  EXPECT_GT(DyadicPowerSum::power(1, beta), DyadicPowerSum(make_rational(70, 100)));
  EXPECT_EQ(sign(DyadicPowerSum::power(1, beta) - DyadicPowerSum::power(1, beta)), 0);
  const DyadicPowerSum mixed = DyadicPowerSum::power(1, make_rational(1, 3)) + DyadicPowerSum(Rational(3));
  EXPECT_EQ(DyadicPowerSum::parse(mixed.to_string()), mixed);
  EXPECT_EQ(DyadicPowerSum::power(3, Rational(1)).rational_value(), make_rational(1, 8));
  EXPECT_EQ(DyadicPowerSum::power(1, beta).to_decimal(10).substr(0, 8), "0.707106");
}

TEST(DyadicDomain, MortonRoundTrip) {
  const DyadicDomain dom(2, 3);
  for (std::size_t i = 0; i < dom.cell_count(); ++i) EXPECT_EQ(dom.morton(dom.coordinates(i, 3), 3), i);
  EXPECT_EQ(dom.morton(std::vector<long>{1, 0}, 1), 1U);
  EXPECT_EQ(dom.morton(std::vector<long>{0, 1}, 1), 2U);
  EXPECT_THROW(dom.morton(std::vector<long>{8, 0}, 3), ValidationError);
  EXPECT_THROW(DyadicDomain(5, 5), ValidationError);
}

TEST(Content, Examples) {
  const DyadicDomain dom(1, 2);
  const auto empty = content(DyadicCellSet(dom), Rational(1));
  EXPECT_EQ(sign(empty.value), 0);
  EXPECT_TRUE(empty.cubes.empty());

  const auto all = content(DyadicCellSet::from_mask(dom, 0xF), kHalf);
  EXPECT_EQ(all.value, DyadicPowerSum(1));
  ASSERT_EQ(all.cubes.size(), 1U);
  EXPECT_EQ(all.cubes[0].level, 0);

  const DyadicCellSet ends = DyadicCellSet::from_coordinates(dom, {{0}, {3}});
  const auto one = content(ends, Rational(1));
  EXPECT_EQ(one.value, DyadicPowerSum(kHalf));
  EXPECT_TRUE(one.exact_rational);
  ASSERT_EQ(one.cubes.size(), 2U);
  EXPECT_EQ(one.cubes[0], (DyadicCube{2, {0}}));
  EXPECT_EQ(one.cubes[1], (DyadicCube{2, {3}}));

  // Tie between the unit cube and two quarter cells: the single cube wins.
  const auto half = content(ends, kHalf);
  EXPECT_EQ(half.value, DyadicPowerSum(1));
  ASSERT_EQ(half.cubes.size(), 1U);
  EXPECT_EQ(half.cubes[0].level, 0);
  EXPECT_FALSE(half.exact_rational);

  EXPECT_TRUE(content(ends, Rational(2)).beta_above_dimension);
  EXPECT_THROW(content(ends, Rational(0)), ValidationError);
}

TEST(Content, SingleCell) {
  for (int l = 0; l <= 4; ++l)
    for (const Rational& beta : {kHalf, Rational(1), make_rational(3, 2), make_rational(5, 3)}) {
      const DyadicDomain dom(2, l);
      DyadicCellSet e(dom);
      e.insert(dom.cell_count() - 1);
      EXPECT_EQ(content(e, beta).value, DyadicPowerSum::power(l, beta));
    }
}

TEST(CoverCertificate, AcceptsOptimalRejectsMissing) {
  const DyadicDomain dom(1, 2);
  const DyadicCellSet ends = DyadicCellSet::from_coordinates(dom, {{0}, {3}});
  const auto best = content(ends, Rational(1));
  EXPECT_TRUE(cover_certificate_check(ends, Rational(1), best).valid());

  CoverSolution missing = best;
  missing.cubes.pop_back();
  missing.value = DyadicPowerSum(make_rational(1, 4));
  const auto bad = cover_certificate_check(ends, Rational(1), missing);
  EXPECT_FALSE(bad.covers);
  EXPECT_EQ(bad.uncovered_cell, 3U);

  CoverSolution whole{DyadicPowerSum(1), {DyadicCube{0, {0}}}};
  const auto loose = cover_certificate_check(ends, Rational(1), whole);
  EXPECT_TRUE(loose.valid());
  EXPECT_GT(whole.value, best.value);

  CoverSolution wrong_value = best;
  wrong_value.value = DyadicPowerSum(1);
  EXPECT_FALSE(cover_certificate_check(ends, Rational(1), wrong_value).value_matches);
}

TEST(Export, UnitDepthTable) {
  const DyadicDomain dom(1, 1);
  const Capacity h = export_rational_capacity(dom, Rational(1));
  const Capacity expected(GroundSet(2), {Rational(0), kHalf, kHalf, Rational(1)});
  EXPECT_EQ(h, expected);
  EXPECT_THROW(export_rational_capacity(dom, kHalf), ValidationError);
  EXPECT_THROW(export_capacity(DyadicDomain(1, 5), Rational(1)), ValidationError);
}

// Minimum over every antichain of the dyadic tree that covers E.
DyadicPowerSum antichain_minimum(const std::vector<oracle::Antichain>& antichains, unsigned e, const Rational& beta) {
  std::optional<DyadicPowerSum> best;
  for (const auto& a : antichains) {
    if ((a.covered & e) != e) continue;
    DyadicPowerSum cost = oracle::antichain_cost(a, beta);
    if (!best || cost < *best) best = cost;
  }
  return *best;
}

TEST(ContentProperties, MatchesAntichainOracle) {
  for (int l = 0; l <= 2; ++l) {
    const DyadicDomain dom(1, l);
    const auto antichains = oracle::dyadic_antichains(l);
    for (const Rational& beta : {kHalf, Rational(1), make_rational(3, 2)})
      for (unsigned e = 0; e < (1U << (1 << l)); ++e) {
        const DyadicCellSet set = DyadicCellSet::from_mask(dom, e);
        const auto sol = content(set, beta);
        EXPECT_EQ(sol.value, antichain_minimum(antichains, e, beta)) << "L=" << l << " E=" << e;
        EXPECT_TRUE(cover_certificate_check(set, beta, sol).valid());
      }
  }
}

TEST(ContentProperties, OracleAtDepthThreeIntegerBeta) {
  const DyadicDomain dom(1, 3);
  const auto antichains = oracle::dyadic_antichains(3);
  ASSERT_EQ(antichains.size(), 677U);
  for (unsigned e = 0; e < 256; e += 3)
    EXPECT_EQ(content(DyadicCellSet::from_mask(dom, e), Rational(1)).value, antichain_minimum(antichains, e, Rational(1)));
}

TEST(ContentProperties, MonotoneAndSelfSimilar) {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = static_cast<int>(rng.uniform(1, 2));
    const int l = static_cast<int>(rng.uniform(1, d == 1 ? 6 : 3));
    const Rational beta = make_rational(rng.uniform(1, 8), 4);
    const DyadicDomain dom(d, l), parent(d, l - 1);
    DyadicCellSet e(dom), f(dom), scaled(parent), shrunk(dom);
    const std::size_t child = static_cast<std::size_t>(rng.uniform(0, (1L << d) - 1));
    const std::size_t width = parent.cell_count();
    for (std::size_t i = 0; i < dom.cell_count(); ++i) {
      const bool in_e = rng.chance(1, 3);
      if (in_e) e.insert(i);
      if (in_e || rng.chance(1, 3)) f.insert(i);
    }
    for (std::size_t i = 0; i < width; ++i)
      if (rng.chance(1, 2)) {
        scaled.insert(i);
        shrunk.insert(child * width + i);
      }
    EXPECT_LE(content(e, beta).value, content(f, beta).value);
    EXPECT_EQ(content(shrunk, beta).value, content(scaled, beta).value.times_power(1, beta));
  }
}

TEST(ExportProperties, AxiomsHoldExhaustively) {
  struct Case {
    int d, l;
    Rational beta;
  };
  const std::vector<Case> cases{{1, 1, kHalf}, {1, 2, kHalf}, {1, 2, Rational(1)}, {1, 2, make_rational(3, 2)},
                                {2, 1, Rational(1)}, {2, 1, make_rational(3, 2)}, {1, 3, Rational(1)}};
  for (const auto& c : cases) {
    const ContentCapacity h = export_capacity(DyadicDomain(c.d, c.l), c.beta);
    for (Axiom a : {Axiom::EmptySet, Axiom::Monotone, Axiom::FiniteSubadditive, Axiom::StronglySubadditive})
      EXPECT_TRUE(check_axiom(h, a).holds) << axiom_name(a) << " d=" << c.d << " L=" << c.l;
  }
}

}  // namespace
}  // namespace choquet
