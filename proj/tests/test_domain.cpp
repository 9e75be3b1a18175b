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

namespace choquet {
namespace {

const GroundSet kTwo(2), kThree(3);

TEST(Rationals, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0.999"), Rational(999, 1000));
  EXPECT_EQ(parse_rational("2.5e-1"), Rational(1, 4));
  EXPECT_EQ(to_string(make_rational(6, 4)), "3/2");
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational("abc"), ValidationError);
}

TEST(Extended, InfinityArithmetic) {
  const ExtReal inf = ExtReal::infinity();
  EXPECT_EQ(inf + ExtReal(Rational(3)), inf);
  EXPECT_EQ(mul(ExtReal(Rational(0)), inf), ExtReal(Rational(0)));
  EXPECT_EQ(mul(ExtReal(Rational(2)), inf), inf);
  EXPECT_LT(ExtReal(Rational(1000)), inf);
  EXPECT_EQ(parse_extended("inf"), inf);
  EXPECT_EQ(to_string(inf), "inf");
}

TEST(SubsetMask, SetAlgebra) {
  const SubsetMask a = SubsetMask::of(kThree, {0, 2});
  const SubsetMask b = SubsetMask::of(kThree, {1, 2});
  EXPECT_EQ((a & b), SubsetMask::of(kThree, {2}));
  EXPECT_EQ((a | b), SubsetMask::full(kThree));
  EXPECT_EQ(a.complement(), SubsetMask::of(kThree, {1}));
  EXPECT_EQ(a.minus(b), SubsetMask::of(kThree, {0}));
  EXPECT_EQ(a.count(), 2);
  EXPECT_EQ(to_string(a), "{0,2}");
  EXPECT_THROW(SubsetMask::of(kThree, {3}), ValidationError);
  EXPECT_THROW(GroundSet(25), ValidationError);
}

TEST(Superlevel, StrictAndWeak) {
  const StepFunction f = StepFunction::of(kThree, {3, 1, 0});
  EXPECT_EQ(superlevel(f, 1, true), SubsetMask::of(kThree, {0}));
  EXPECT_EQ(superlevel(f, 0, true), SubsetMask::of(kThree, {0, 1}));
  EXPECT_EQ(superlevel(f, 1, false), SubsetMask::of(kThree, {0, 1}));
}

TEST(Truncate, ClampsToHeight) {
  const StepFunction f(kThree, {Rational(5), Rational(2), ExtReal::infinity()});
  EXPECT_EQ(truncate(f, 3), StepFunction::of(kThree, {3, 2, 3}));
  EXPECT_EQ(truncate(StepFunction::of(kTwo, {-4, 1}), 2), StepFunction::of(kTwo, {-2, 1}));
  EXPECT_EQ(truncate(StepFunction::of(kTwo, {1, 1}), 10), StepFunction::of(kTwo, {1, 1}));
}

TEST(FloorScale, ExactFloors) {
  const StepFunction f = StepFunction::of(kTwo, {Rational(7, 10), make_rational(126, 100)});
  EXPECT_EQ(floor_scale(f, 2), StepFunction::of(kTwo, {Rational(1, 2), Rational(1)}));
  EXPECT_EQ(floor_scale(StepFunction::of(kTwo, {2, 3}), 5), StepFunction::of(kTwo, {2, 3}));
  // 0.999 * 1000 is exactly 999; a binary double would land just below.
  const GroundSet one(1);
  const StepFunction g = StepFunction::of(one, {parse_rational("0.999")});
  EXPECT_EQ(floor_scale(g, 1000), g);
  EXPECT_THROW(floor_scale(StepFunction(one, {ExtReal::infinity()}), 2), ValidationError);
}

TEST(PointwiseOps, Examples) {
  EXPECT_EQ(indicator(SubsetMask::of(kThree, {0, 2})), StepFunction::of(kThree, {1, 0, 1}));
  EXPECT_EQ(add(StepFunction::of(kTwo, {1, 2}), StepFunction::of(kTwo, {3, 4})), StepFunction::of(kTwo, {4, 6}));
  EXPECT_EQ(abs(StepFunction::of(kTwo, {-1, 2})), StepFunction::of(kTwo, {1, 2}));
  EXPECT_EQ(sub(StepFunction::of(kTwo, {1, 2}), StepFunction::of(kTwo, {3, 1})), StepFunction::of(kTwo, {-2, 1}));
  EXPECT_THROW(StepFunction(kTwo, {Rational(-1), ExtReal::infinity()}), ValidationError);
  EXPECT_THROW(add(StepFunction::of(kTwo, {1, 2}), StepFunction::of(kThree, {1, 2, 3})), ValidationError);
}

class DomainProperties : public ::testing::TestWithParam<int> {};

TEST_P(DomainProperties, SuperlevelsTruncationAndFloors) {
  const GroundSet u(GetParam());
  Rng rng(1000 + static_cast<std::uint64_t>(GetParam()));
  for (int trial = 0; trial < 200; ++trial) {
    const StepFunction f = random_function(u, rng, 16, 4);
    const Rational t = rng.rational(16, 4);
    const Rational t2 = t + rng.rational(8, 8) + Rational(1, 16);
    for (bool strict : {false, true}) EXPECT_TRUE(superlevel(f, t2, strict).is_subset_of(superlevel(f, t, strict)));

    const Rational k = rng.rational(12, 4) + Rational(1, 4);
    for (bool strict : {false, true}) {
      const SubsetMask s = superlevel(truncate(f, k), t, strict);
      if (t < k)
        EXPECT_EQ(s, superlevel(f, t, strict));
      else if (t > k || strict)
        EXPECT_TRUE(s.is_empty());
    }

    const long kk = rng.uniform(1, 7);
    const StepFunction fl = floor_scale(f, kk);
    for (int x = 0; x < u.size(); ++x) {
      EXPECT_LE(fl[x], f[x]);
      EXPECT_LT(f[x].value() - fl[x].value(), Rational(1, kk));
    }

    const SubsetMask a = random_subset(u, rng), b = random_subset(u, rng);
    const StepFunction sum = add(indicator(a), indicator(b));
    EXPECT_EQ(superlevel(sum, 2, false), a & b);
    EXPECT_EQ(superlevel(sum, 1, false), a | b);
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, DomainProperties, ::testing::Values(1, 3, 6));

}  // namespace
}  // namespace choquet
