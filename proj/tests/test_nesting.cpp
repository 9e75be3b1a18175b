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
#include "choquet/nesting.hpp"
#include "oracles.hpp"

namespace choquet {
namespace {

const GroundSet kThree(3), kFour(4);

SubsetMask set(GroundSet u, std::initializer_list<int> points) { return SubsetMask::of(u, points); }

// Σ_j χ_{C_j}(x) as a step function.
StepFunction count_function(const std::vector<SubsetMask>& family) {
  StepFunction total = StepFunction::zero(family.front().universe());
  for (const auto& s : family) total = add(total, indicator(s));
  return total;
}

TEST(LemmaStep, Examples) {
  const auto d = lemma_step({set(kThree, {0, 1}), set(kThree, {1, 2})});
  ASSERT_EQ(d.size(), 2U);
  EXPECT_EQ(d[0], set(kThree, {1}));
  EXPECT_EQ(d[1], set(kThree, {0, 1, 2}));
  const SubsetMask a = set(kThree, {0, 2});
  EXPECT_EQ(lemma_step({a}), std::vector<SubsetMask>{a});
  EXPECT_EQ(lemma_step({a, a}), (std::vector<SubsetMask>{a, a}));
  EXPECT_THROW(lemma_step(std::span<const SubsetMask>()), ValidationError);
}

TEST(Nest, Examples) {
  const auto a = nest({set(kThree, {0, 1}), set(kThree, {1, 2})});
  ASSERT_EQ(a.size(), 2U);
  EXPECT_EQ(a[0], set(kThree, {1}));
  EXPECT_EQ(a[1], SubsetMask::full(kThree));

  const SubsetMask x = SubsetMask::full(kThree);
  const auto same = nest({x, x, x});
  for (const auto& s : same.sets()) EXPECT_EQ(s, x);

  const auto singles = nest({set(kThree, {0}), set(kThree, {1}), set(kThree, {2})});
  EXPECT_TRUE(singles[0].is_empty());
  EXPECT_TRUE(singles[1].is_empty());
  EXPECT_EQ(singles[2], x);
  EXPECT_THROW(nest(std::span<const SubsetMask>()), ValidationError);
}

TEST(Nest, TraceExposesEachLevel) {
  NestingTrace trace;
  const std::vector<SubsetMask> c{set(kFour, {0, 1}), set(kFour, {1, 2}), set(kFour, {2, 3}), set(kFour, {0, 3})};
  const auto a = nest(c, &trace);
  ASSERT_EQ(trace.d_families.size(), 4U);
  EXPECT_EQ(trace.d_families[0].size(), 4U);
  EXPECT_EQ(trace.d_families[3].size(), 1U);
  // Every point is in exactly two sets.
  EXPECT_TRUE(a[0].is_empty());
  EXPECT_TRUE(a[1].is_empty());
  EXPECT_EQ(a[2], SubsetMask::full(kFour));
  EXPECT_EQ(a[3], SubsetMask::full(kFour));
}

TEST(NestedFamily, RejectsUnnestedInput) {
  EXPECT_THROW(NestedFamily({set(kThree, {0}), set(kThree, {1})}), InvariantViolation);
}

TEST(CapacitySumAudit, AdditiveGivesEqualSums) {
  const std::vector<Rational> masses{1, 2, 3};
  const Capacity h = additive_capacity(kThree, masses);
  const std::vector<SubsetMask> c{set(kThree, {0, 1}), set(kThree, {1, 2})};
  const auto r = capacity_sum_audit(c, h);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.sum_c, ExtReal(Rational(8)));
  EXPECT_EQ(r.sum_d, r.sum_c);
  EXPECT_EQ(r.sum_a, r.sum_c);
}

TEST(CapacitySumAudit, DisjointSetsGivePrefixUnions) {
  const Capacity h = generate_capacity(CapacityKind::RandomSubmodularMonotone, kThree, 5);
  const std::vector<SubsetMask> c{set(kThree, {0}), set(kThree, {1}), set(kThree, {2})};
  const auto r = capacity_sum_audit(c, h);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.d_chain.back(), SubsetMask::full(kThree));
  EXPECT_LE(r.sum_a, r.sum_c);
}

TEST(CapacitySumAudit, RefusesWithoutStrongSubadditivity) {
  const Capacity h = oracle::table(2, {0, 1, 1, 3});
  const std::vector<SubsetMask> c{SubsetMask::of(GroundSet(2), {0}), SubsetMask::of(GroundSet(2), {1})};
  EXPECT_THROW(capacity_sum_audit(c, h), RefusalError);
  // The refusal is warranted: the rearranged sum really does exceed the original.
  EXPECT_GT(capacity_sum(nest(c).sets(), h), capacity_sum(c, h));
}

// Exhaustive sweep over every family of 1 to 4 subsets of a 4-point set.
TEST(NestProperties, ExhaustiveOverFourPoints) {
  std::vector<Capacity> capacities;
  for (std::uint64_t seed = 0; seed < 3; ++seed)
    capacities.push_back(generate_capacity(CapacityKind::RandomSubmodularMonotone, kFour, seed));
  capacities.push_back(generate_capacity(CapacityKind::RandomSubmodularInfinite, kFour, 11));
  std::vector<StronglySubadditiveCapacity> verified;
  for (const auto& h : capacities) verified.push_back(*StronglySubadditiveCapacity::verify(h));

  for (int length = 1; length <= 4; ++length) {
    const std::uint32_t families = 1U << (4 * length);
    for (std::uint32_t code = 0; code < families; ++code) {
      std::vector<SubsetMask> c;
      for (int j = 0; j < length; ++j) c.emplace_back(kFour, (code >> (4 * j)) & 0xFU);
      const StepFunction counts = count_function(c);

      const auto d = lemma_step(c);
      ASSERT_EQ(d.size(), c.size());
      EXPECT_EQ(count_function(d), counts);
      for (const auto& s : d) EXPECT_TRUE(s.is_subset_of(d.back()));
      Mask all = 0;
      for (const auto& s : c) all |= s.bits();
      EXPECT_EQ(d.back().bits(), all);

      const auto a = nest(c);
      EXPECT_EQ(count_function(a.sets()), counts);
      for (int i = 1; i <= length; ++i)
        EXPECT_EQ(a[static_cast<std::size_t>(i - 1)], superlevel(counts, Rational(length - i + 1), false));

      if (code % 7 == 0)
        for (const auto& v : verified) EXPECT_TRUE(capacity_sum_audit(c, v).holds);
    }
  }
}

}  // namespace
}  // namespace choquet
