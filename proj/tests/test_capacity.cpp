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
#include "oracles.hpp"

namespace choquet {
namespace {

using oracle::table;
const ExtReal kInf = ExtReal::infinity();

// Direct transcriptions of the axioms over every pair of masks.
bool brute_monotone(const Capacity& h) {
  for (Mask a = 0; a < h.size(); ++a)
    for (Mask b = 0; b < h.size(); ++b)
      if ((a & b) == a && h.at(b) < h.at(a)) return false;
  return true;
}

bool brute_subadditive(const Capacity& h) {
  for (Mask a = 0; a < h.size(); ++a)
    for (Mask b = 0; b < h.size(); ++b)
      if (h.at(a | b) > h.at(a) + h.at(b)) return false;
  return true;
}

bool brute_strong(const Capacity& h) {
  for (Mask a = 0; a < h.size(); ++a)
    for (Mask b = 0; b < h.size(); ++b)
      if (h.at(a | b) + h.at(a & b) > h.at(a) + h.at(b)) return false;
  return true;
}

TEST(CapacityTable, RejectsMalformedTables) {
  EXPECT_THROW(Capacity(GroundSet(2), {Rational(0), Rational(1)}), ValidationError);
  EXPECT_THROW(table(1, {0, -1}), ValidationError);
  EXPECT_THROW(additive_capacity(GroundSet(2), std::vector<Rational>{1}), ValidationError);
}

TEST(CheckAxiom, NotSubadditiveExample) {
  const Capacity h = table(2, {0, 1, 1, 3});
  EXPECT_TRUE(check_axiom(h, Axiom::EmptySet).holds);
  EXPECT_TRUE(check_axiom(h, Axiom::Monotone).holds);
  const auto fsa = check_axiom(h, Axiom::FiniteSubadditive);
  ASSERT_FALSE(fsa.holds);
  ASSERT_TRUE(fsa.witness);
  EXPECT_EQ(fsa.witness->sets[0], SubsetMask::of(GroundSet(2), {0}));
  EXPECT_EQ(fsa.witness->sets[1], SubsetMask::of(GroundSet(2), {1}));
  EXPECT_TRUE(witness_violates(h, fsa));
  const auto ssa = check_axiom(h, Axiom::StronglySubadditive);
  EXPECT_FALSE(ssa.holds);
  EXPECT_TRUE(witness_violates(h, ssa));
  EXPECT_FALSE(check_axiom(h, Axiom::CountableSubadditive).holds);
  EXPECT_TRUE(check_axiom(h, Axiom::Semifinite).holds);
  EXPECT_TRUE(check_axiom(h, Axiom::LocallyFinite).holds);
}

TEST(CheckAxiom, EmptySetAndMonotoneWitnesses) {
  const Capacity h = table(2, {1, 2, 0, 3});
  const auto empty = check_axiom(h, Axiom::EmptySet);
  EXPECT_FALSE(empty.holds);
  EXPECT_TRUE(witness_violates(h, empty));
  const auto mono = check_axiom(h, Axiom::Monotone);
  EXPECT_FALSE(mono.holds);
  EXPECT_TRUE(witness_violates(h, mono));
  EXPECT_FALSE(check_axiom(h, Axiom::CountableSubadditive).holds);
}

TEST(CheckAxiom, InfiniteValues) {
  const Capacity h = table(2, {0, 2, kInf, kInf});
  EXPECT_TRUE(check_axiom(h, Axiom::Monotone).holds);
  const auto semi = check_axiom(h, Axiom::Semifinite);
  EXPECT_FALSE(semi.holds);
  EXPECT_TRUE(witness_violates(h, semi));
  const auto local = check_axiom(h, Axiom::LocallyFinite);
  EXPECT_FALSE(local.holds);
  EXPECT_TRUE(witness_violates(h, local));
  // With only a target of 2, the set {0,1} contains {0} at H = 2.
  const auto explicit_targets = check_semifinite(h, {ExtReal(Rational(2))});
  EXPECT_FALSE(explicit_targets.holds);
  EXPECT_EQ(explicit_targets.witness->sets[0], SubsetMask::of(GroundSet(2), {1}));
}

TEST(CheckAxiom, VacuousAxiomsHoldWithNote) {
  const Capacity h = table(2, {0, kInf, 1, kInf});
  for (Axiom a : {Axiom::ZeroCapacityRegular, Axiom::InnerRegular, Axiom::OuterRegular}) {
    const auto r = check_axiom(h, a);
    EXPECT_TRUE(r.holds);
    EXPECT_FALSE(r.note.empty());
  }
}

TEST(CheckAxiom, ParsesNames) {
  EXPECT_EQ(parse_axiom("submodular"), Axiom::StronglySubadditive);
  for (Axiom a : kAllAxioms) EXPECT_EQ(parse_axiom(axiom_name(a)), a);
  EXPECT_THROW(parse_axiom("convex"), ValidationError);
}

TEST(Regularize, DropsInfiniteValues) {
  EXPECT_EQ(regularize(table(2, {0, 2, kInf, kInf})), table(2, {0, 2, 0, 2}));
  EXPECT_EQ(regularize(table(1, {kInf, kInf})), table(1, {0, 0}));
}

TEST(Contract, RestrictsToSubset) {
  const Capacity h = table(2, {0, 1, 1, 3});
  EXPECT_EQ(contract(h, SubsetMask::of(GroundSet(2), {0})), table(2, {0, 1, 0, 1}));
  EXPECT_EQ(contract(h, SubsetMask::full(GroundSet(2))), h);
  EXPECT_THROW(contract(h, SubsetMask::full(GroundSet(3))), ValidationError);
}

TEST(StrongViolation, FindsSmallestPair) {
  EXPECT_FALSE(find_strong_subadditivity_violation(table(2, {0, 1, 1, 2})));
  const auto v = find_strong_subadditivity_violation(table(2, {0, 1, 1, 3}));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->first.bits(), 1U);
  EXPECT_EQ(v->second.bits(), 2U);
}

class GeneratedCapacities : public ::testing::TestWithParam<CapacityKind> {};

TEST_P(GeneratedCapacities, ReportsAgreeWithBruteForce) {
  const CapacityKind kind = GetParam();
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      GeneratorOptions opt;
      opt.threshold = static_cast<int>(seed % static_cast<std::uint64_t>(n));
      const Capacity h = generate_capacity(kind, GroundSet(n), seed * 31 + static_cast<std::uint64_t>(n), opt);
      EXPECT_TRUE(is_zero(h.at(0)));
      EXPECT_TRUE(brute_monotone(h));
      const auto fsa = check_axiom(h, Axiom::FiniteSubadditive);
      const auto ssa = check_axiom(h, Axiom::StronglySubadditive);
      EXPECT_EQ(fsa.holds, brute_subadditive(h));
      EXPECT_EQ(ssa.holds, brute_strong(h));
      if (!fsa.holds) EXPECT_TRUE(witness_violates(h, fsa));
      if (!ssa.holds) EXPECT_TRUE(witness_violates(h, ssa));
      if (kind == CapacityKind::RandomSubmodularMonotone || kind == CapacityKind::RandomSubmodularInfinite ||
          kind == CapacityKind::Additive)
        EXPECT_TRUE(ssa.holds);
      EXPECT_EQ(check_axiom(h, Axiom::Semifinite).holds, h.is_finite());
      EXPECT_EQ(check_axiom(h, Axiom::LocallyFinite).holds, h.is_finite());

      const Capacity r = regularize(h);
      EXPECT_TRUE(r.is_finite());
      EXPECT_TRUE(brute_monotone(r));
      EXPECT_EQ(regularize(r), r);
      for (Mask a = 0; a < h.size(); ++a)
        if (h.at(a).is_finite()) EXPECT_EQ(r.at(a), h.at(a));

      const SubsetMask s(GroundSet(n), static_cast<Mask>(seed) & GroundSet(n).full_bits());
      const Capacity c = contract(h, s);
      EXPECT_TRUE(brute_monotone(c));
      for (Mask a = 0; a < h.size(); ++a) EXPECT_EQ(c.at(a), h.at(a & s.bits()));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, GeneratedCapacities,
                         ::testing::Values(CapacityKind::RandomMonotone, CapacityKind::RandomSubmodularMonotone,
                                           CapacityKind::Additive, CapacityKind::Threshold,
                                           CapacityKind::ThresholdInfinite, CapacityKind::RandomMonotoneInfinite,
                                           CapacityKind::RandomSubmodularInfinite),
                         [](const auto& info) {
                           std::string name(kind_name(info.param));
                           std::erase(name, '-');
                           return name;
                         });

}  // namespace
}  // namespace choquet
