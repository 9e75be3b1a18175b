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

#include "choquet/convergence.hpp"
#include "choquet/generators.hpp"
#include "oracles.hpp"

namespace choquet {
namespace {

using oracle::table;
const GroundSet kTwo(2);

bool all_hold(const ConvergenceAudit& a) {
  for (const auto& c : a.checks)
    if (!c.holds) return false;
  return true;
}

std::string failures(const ConvergenceAudit& a) {
  std::string out;
  for (const auto& c : a.checks)
    if (!c.holds) out += c.name + ": " + to_string(c.lhs) + " vs " + to_string(c.rhs) + "\n";
  return out;
}

FunctionSequence constant_sequence(const StepFunction& f, std::size_t length) {
  return FunctionSequence(std::vector<StepFunction>(length, f), f);
}

TEST(QuAudit, ConstantSequenceVerifies) {
  const Capacity h = table(2, {0, 1, 1, 2});
  const auto a = qu_audit(constant_sequence(StepFunction::of(kTwo, {1, 2}), 4), h, make_rational(1, 8), 0);
  EXPECT_EQ(a.qu_verdict, QuVerdict::Verified);
  EXPECT_TRUE(a.minimal_bad_set->is_empty());
}

TEST(QuAudit, NullExceptionalSet) {
  const Capacity h = table(2, {0, 0, 1, 1});
  const StepFunction chi = indicator(SubsetMask::of(kTwo, {0}));
  const FunctionSequence seq({chi, chi, chi}, StepFunction::zero(kTwo));
  const auto a = qu_audit(seq, h, make_rational(1, 2), 0);
  EXPECT_EQ(*a.minimal_bad_set, SubsetMask::of(kTwo, {0}));
  EXPECT_EQ(a.qu_verdict, QuVerdict::Verified);
}

TEST(QuAudit, MovingIndicatorsUnderThresholdCapacity) {
  const GroundSet u(6);
  const Capacity h = generate_capacity(CapacityKind::Threshold, u, 0, GeneratorOptions{0});
  std::vector<StepFunction> terms;
  for (int x = 0; x < 6; ++x) terms.push_back(indicator(SubsetMask::of(u, {x})));
  const FunctionSequence seq(terms, StepFunction::zero(u));
  for (std::size_t tail = 0; tail + 1 < 6; ++tail) {
    const auto a = qu_audit(seq, h, make_rational(1, 2), tail, make_rational(1, 2));
    EXPECT_EQ(a.qu_verdict, QuVerdict::Refuted);
    EXPECT_EQ(h(*a.minimal_bad_set), ExtReal(Rational(1)));
    ASSERT_TRUE(a.witness_point);
    EXPECT_GE(*a.witness_index, tail);
  }
  EXPECT_EQ(qu_audit(seq, h, make_rational(1, 2), 0, Rational(1)).qu_verdict, QuVerdict::Verified);
  EXPECT_EQ(qu_audit(seq, h, make_rational(1, 2), 5).qu_verdict, QuVerdict::InsufficientPrefix);
  EXPECT_THROW(qu_audit(seq, h, make_rational(1, 2), 6), ValidationError);
  EXPECT_THROW(qu_audit(seq, h, Rational(0), 0), ValidationError);
}

TEST(Chebyshev, Examples) {
  const Capacity h = table(2, {0, 1, 1, 3});
  const StepFunction f = StepFunction::of(kTwo, {2, 1});
  const auto same = chebyshev_audit(f, f, h, 3);
  EXPECT_TRUE(same.holds);
  EXPECT_EQ(same.rhs, ExtReal(Rational(0)));
  const auto strict = chebyshev_audit(add(f, indicator(SubsetMask::full(kTwo))), f, h, 0);
  EXPECT_EQ(strict.lhs, ExtReal(Rational(0)));
  EXPECT_EQ(strict.rhs, ExtReal(Rational(3)));
}

TEST(Fatou, ConstantSequenceIsEquality) {
  const Capacity h = table(2, {0, 1, 1, 2});
  const StepFunction f = StepFunction::of(kTwo, {1, 2});
  FatouOptions opt;
  opt.eta = make_rational(1, 4);
  opt.k = 2;
  const auto a = fatou_harness(constant_sequence(f, 3), h, opt);
  EXPECT_TRUE(all_hold(a)) << failures(a);
  EXPECT_EQ(a.qu_verdict, QuVerdict::Verified);
}

TEST(Fatou, ScheduledExceptionalSet) {
  const GroundSet u(3);
  const Capacity h = generate_capacity(CapacityKind::RandomSubmodularMonotone, u, 4);
  const StepFunction f = StepFunction::of(u, {2, 1, 3});
  const SubsetMask e = SubsetMask::of(u, {2});
  std::vector<StepFunction> terms(4, StepFunction::of(u, {2, 1, 0}));
  const FunctionSequence seq(terms, f, {{h(e).value(), e}});
  FatouOptions opt;
  opt.eta = make_rational(1, 8);
  opt.k = 3;
  const auto a = fatou_harness(seq, h, opt);
  EXPECT_TRUE(all_hold(a)) << failures(a);
}

TEST(Fatou, RefusesAndSearchesWithoutSubadditivity) {
  const Capacity h = table(2, {0, 1, 1, 3});
  const StepFunction one = StepFunction::of(kTwo, {1, 1});
  EXPECT_THROW(fatou_harness(constant_sequence(one, 2), h), RefusalError);
  const auto found = fatou_counterexample_search(h);
  ASSERT_TRUE(found);
  EXPECT_FALSE(all_hold(found->audit));
  EXPECT_FALSE(fatou_counterexample_search(table(2, {0, 1, 1, 2})));
}

TEST(Dct, GeometricPerturbationConverges) {
  const Capacity h = table(2, {0, 1, 1, 2});
  const StepFunction f = StepFunction::of(kTwo, {1, 0});
  const SubsetMask e = SubsetMask::of(kTwo, {1});
  std::vector<StepFunction> terms;
  for (long n = 0; n < 6; ++n) terms.push_back(add(f, scale(indicator(e), pow2(-n))));
  const FunctionSequence seq(terms, f);
  const StepFunction dominator = add(f, indicator(e));
  const auto a = dct_harness(seq, dominator, h);
  EXPECT_TRUE(all_hold(a)) << failures(a);
  for (long n = 0; n < 6; ++n) EXPECT_EQ(a.values[static_cast<std::size_t>(n)], ExtReal(pow2(-n)));
  EXPECT_FALSE(a.stalled);
}

TEST(Dct, SignFlipStalls) {
  const Capacity h = table(2, {0, 1, 1, 2});
  const StepFunction f = StepFunction::of(kTwo, {1, 1});
  const SubsetMask e = SubsetMask::of(kTwo, {0});
  std::vector<StepFunction> terms;
  for (int n = 0; n < 6; ++n) terms.push_back(StepFunction::of(kTwo, {n % 2 == 0 ? 2 : 0, 1}));
  const FunctionSequence seq(terms, f, {{Rational(1), e}});
  const auto a = dct_harness(seq, StepFunction::of(kTwo, {2, 1}), h);
  EXPECT_TRUE(a.stalled);
  EXPECT_TRUE(all_hold(a)) << failures(a);
  for (const auto& v : a.envelope) EXPECT_EQ(v, ExtReal(Rational(1)));
}

TEST(Dct, RejectsUndominatedTerms) {
  const Capacity h = table(2, {0, 1, 1, 2});
  const StepFunction f = StepFunction::of(kTwo, {1, 1});
  try {
    dct_harness(FunctionSequence({f, StepFunction::of(kTwo, {1, 3})}, f), StepFunction::of(kTwo, {2, 2}), h);
    FAIL() << "expected a domination error";
  } catch (const ValidationError& err) {
    EXPECT_NE(std::string(err.what()).find("n=1, x=1"), std::string::npos);
  }
}

TEST(ConverseDct, QuarticPerturbation) {
  const Capacity h = table(2, {0, 1, 1, 2});
  const StepFunction f = StepFunction::of(kTwo, {1, 3});
  const SubsetMask e = SubsetMask::of(kTwo, {0});
  std::vector<StepFunction> terms;
  for (long n = 0; n < 6; ++n) terms.push_back(add(f, scale(indicator(e), pow2(-2 * n))));
  const auto a = converse_dct_audit(FunctionSequence(terms, f), h);
  EXPECT_TRUE(all_hold(a)) << failures(a);
  EXPECT_TRUE(a.minimal_bad_set->is_empty());

  const auto same = converse_dct_audit(constant_sequence(f, 3), h);
  EXPECT_TRUE(all_hold(same));

  std::vector<StepFunction> slow(3, add(f, indicator(e)));
  EXPECT_THROW(converse_dct_audit(FunctionSequence(slow, f), h), RefusalError);
}

TEST(CountableSublinearity, ExamplesAndCounterexample) {
  const Capacity h = table(2, {0, 1, 1, 2});
  const StepFunction f = StepFunction::of(kTwo, {2, 1});
  EXPECT_TRUE(all_hold(countable_sublinearity_audit(FunctionSequence({f}, f), h)));

  const Capacity bad = table(2, {0, 1, 1, 3});
  EXPECT_THROW(countable_sublinearity_audit(FunctionSequence({f}, f), bad), RefusalError);
  const auto found = countable_sublinearity_counterexample(bad);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->lhs, ExtReal(Rational(3)));
  EXPECT_EQ(found->rhs, ExtReal(Rational(2)));
  EXPECT_FALSE(countable_sublinearity_counterexample(h));

  const auto short_prefix = countable_sublinearity_audit(FunctionSequence({f}, add(f, f)), h);
  EXPECT_EQ(short_prefix.qu_verdict, QuVerdict::InsufficientPrefix);
}

class ConvergenceProperties : public ::testing::TestWithParam<CapacityKind> {};

TEST_P(ConvergenceProperties, HarnessesNeverReportViolations) {
  const CapacityKind kind = GetParam();
  Rng rng(static_cast<std::uint64_t>(kind) * 7 + 1);
  for (int trial = 0; trial < 40; ++trial) {
    const GroundSet u(static_cast<int>(rng.uniform(1, 4)));
    GeneratorOptions opt;
    opt.threshold = static_cast<int>(rng.uniform(0, u.size() - 1));
    const Capacity h = generate_capacity(kind, u, rng.raw(), opt);
    const bool fsa = check_axiom(h, Axiom::FiniteSubadditive).holds;
    const bool ssa = check_axiom(h, Axiom::StronglySubadditive).holds;

    const StepFunction f = random_function(u, rng, 8, 2);
    const SubsetMask e = random_subset(u, rng);
    std::vector<StepFunction> terms;
    for (int n = 0; n < 5; ++n) {
      const StepFunction noise = random_function(u, rng, 4, 2);
      std::vector<ExtReal> v;
      for (int x = 0; x < u.size(); ++x) v.push_back(e.contains(x) || n < 2 ? noise[x] : f[x]);
      terms.emplace_back(u, std::move(v));
    }
    const FunctionSequence seq(terms, f);

    for (long n = 0; n < 5; ++n) EXPECT_TRUE(chebyshev_audit(seq[static_cast<std::size_t>(n)], f, h, n).holds);

    if (!fsa) continue;
    FatouOptions fo;
    fo.eta = make_rational(rng.uniform(1, 4), 8);
    fo.k = Rational(rng.uniform(1, 5));
    const auto fatou = fatou_harness(seq, h, fo);
    EXPECT_TRUE(all_hold(fatou)) << failures(fatou);

    StepFunction dominator = f;
    for (const auto& t : terms)
      for (int x = 0; x < u.size(); ++x)
        if (dominator[x] < t[x]) dominator = add(dominator, scale(indicator(SubsetMask::of(u, {x})), t[x].value() - dominator[x].value()));
    if (choquet_value(dominator, h).is_finite()) {
      const auto dct = dct_harness(seq, dominator, h, DctOptions{make_rational(1, 4), Rational(2), 0});
      EXPECT_TRUE(all_hold(dct)) << failures(dct);
    }

    if (l1_norm(f, h).is_finite() && is_zero(h.at(0))) {
      std::vector<StepFunction> fast;
      for (long n = 0; n < 5; ++n) {
        const SubsetMask s = random_subset(u, rng);
        const ExtReal cap = h(s);
        Rational c = pow2(-2 * n);
        if (cap.is_infinite()) c = 0;
        else if (sgn(cap.value()) > 0) c /= cap.value();
        fast.push_back(add(f, scale(indicator(s), c)));
      }
      const auto converse = converse_dct_audit(FunctionSequence(fast, f), h);
      EXPECT_TRUE(all_hold(converse)) << failures(converse);
    }

    if (ssa) {
      std::vector<StepFunction> pieces;
      StepFunction total = StepFunction::zero(u);
      for (int j = 0; j < 4; ++j) {
        pieces.push_back(scale(indicator(random_subset(u, rng)), rng.rational(8, 4)));
        total = add(total, pieces.back());
      }
      const auto cs = countable_sublinearity_audit(FunctionSequence(pieces, total), h);
      EXPECT_TRUE(all_hold(cs)) << failures(cs);
      EXPECT_EQ(cs.qu_verdict, QuVerdict::Verified);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, ConvergenceProperties,
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
