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

// The Choquet integral as a supremum of additive integrals over measures
// dominated by H. The supremum is computed exactly by linear programming and
// compared with the greedy (marginal-increment) measure.

#ifndef CHOQUET_DUALITY_HPP
#define CHOQUET_DUALITY_HPP

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "choquet/generators.hpp"
#include "choquet/integral.hpp"
#include "choquet/simplex.hpp"

namespace choquet {

inline constexpr int kMaxLpGroundSet = 16;

class AdditiveMeasure {
 public:
  AdditiveMeasure(GroundSet universe, std::vector<Rational> masses)
      : universe_(universe), masses_(std::move(masses)) {
    if (masses_.size() != static_cast<std::size_t>(universe_.size()))
      throw ValidationError("measure has " + std::to_string(masses_.size()) + " masses for a ground set of size " +
                            std::to_string(universe_.size()));
    for (const auto& m : masses_)
      if (sgn(m) < 0) throw ValidationError("measure masses must be nonnegative");
  }
  static AdditiveMeasure zero(GroundSet universe) {
    return {universe, std::vector<Rational>(static_cast<std::size_t>(universe.size()), Rational(0))};
  }

  const GroundSet& universe() const { return universe_; }
  const std::vector<Rational>& masses() const { return masses_; }
  const Rational& operator[](int x) const { return masses_[static_cast<std::size_t>(x)]; }

  Rational operator()(const SubsetMask& a) const {
    require_same(universe_, a.universe(), "measure");
    Rational s(0);
    for (int x : a.points()) s += masses_[static_cast<std::size_t>(x)];
    return s;
  }

  /// Σ_x f(x) μ({x}) for finite f.
  Rational integral(const StepFunction& f) const {
    require_same(universe_, f.universe(), "measure integral");
    Rational s(0);
    for (int x = 0; x < universe_.size(); ++x) s += f[x].value() * masses_[static_cast<std::size_t>(x)];
    return s;
  }

  friend bool operator==(const AdditiveMeasure& a, const AdditiveMeasure& b) {
    return a.universe_ == b.universe_ && a.masses_ == b.masses_;
  }

 private:
  GroundSet universe_;
  std::vector<Rational> masses_;
};

/// The first A (by mask) with μ(A) > H(A), if any.
inline std::optional<SubsetMask> find_domination_violation(const AdditiveMeasure& mu, const Capacity& h) {
  require_same(mu.universe(), h.universe(), "is_dominated");
  const GroundSet u = h.universe();
  std::vector<Rational> table(u.subset_count());
  for (std::size_t a = 1; a < table.size(); ++a) {
    const int low = std::countr_zero(a);
    table[a] = table[a & (a - 1)] + mu[low];
  }
  for (std::size_t a = 0; a < table.size(); ++a)
    if (h.at(static_cast<Mask>(a)) < ExtReal(table[a])) return SubsetMask(u, static_cast<Mask>(a));
  return std::nullopt;
}

/// μ(A) <= H(A) for every A.
inline bool is_dominated(const AdditiveMeasure& mu, const Capacity& h) {
  return !find_domination_violation(mu, h).has_value();
}

namespace detail {

inline void require_finite_nonnegative(const StepFunction& f, const char* what) {
  if (!f.is_finite() || !f.is_nonnegative())
    throw ValidationError(std::string(what) + " needs a finite nonnegative function");
}

/// Points by decreasing f, ties by ascending index.
inline std::vector<int> greedy_order(const StepFunction& f) {
  std::vector<int> order(static_cast<std::size_t>(f.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return f[a] > f[b]; });
  return order;
}

}  // namespace detail

/// μ(x_i) = H({x_1..x_i}) - H({x_1..x_{i-1}}) along the decreasing order of
/// f. The layer cake telescopes, so Σ f μ = ∫ f dH; this is asserted.
inline AdditiveMeasure greedy_measure(const StepFunction& f, const Capacity& h) {
  require_same(f.universe(), h.universe(), "greedy_measure");
  detail::require_finite_nonnegative(f, "greedy_measure");
  if (auto mono = check_axiom(h, Axiom::Monotone); !mono.holds)
    throw RefusalError("greedy_measure needs a monotone capacity; H decreases from " +
                       to_string(mono.witness->sets[0]) + " to " + to_string(mono.witness->sets[1]));
  if (!is_zero(h.at(0))) throw RefusalError("greedy_measure needs H(∅) = 0, got " + to_string(h.at(0)));

  const GroundSet u = f.universe();
  std::vector<Rational> masses(static_cast<std::size_t>(u.size()));
  Mask prefix = 0;
  Rational previous(0);
  for (int x : detail::greedy_order(f)) {
    prefix |= Mask{1} << x;
    const ExtReal& cap = h.at(prefix);
    if (cap.is_infinite())
      throw RefusalError("greedy_measure: H is infinite on the prefix " + to_string(SubsetMask(u, prefix)));
    masses[static_cast<std::size_t>(x)] = cap.value() - previous;
    previous = cap.value();
  }
  AdditiveMeasure mu(u, std::move(masses));
  if (!(ExtReal(mu.integral(f)) == choquet_value(f, h)))
    throw InvariantViolation("greedy measure integral " + to_string(mu.integral(f)) + " differs from the Choquet value " +
                             to_string(choquet_value(f, h)));
  return mu;
}

enum class DualMethod { Greedy, ExactLP, Both };

/// How infinite capacity values were handled before the LP.
enum class DualApproach {
  Direct,                      // every H(A) finite
  ContractedToSupport,         // H replaced by A -> H(A ∩ {f > 0}), which is finite
  InfiniteConstraintsDropped,  // μ(A) <= inf constraints omitted
};

inline std::string_view method_name(DualMethod m) {
  switch (m) {
    case DualMethod::Greedy: return "greedy";
    case DualMethod::ExactLP: return "lp";
    case DualMethod::Both: return "both";
  }
  return "unknown";
}

inline DualMethod parse_method(std::string_view s) {
  if (s == "greedy") return DualMethod::Greedy;
  if (s == "lp") return DualMethod::ExactLP;
  if (s == "both") return DualMethod::Both;
  throw ValidationError("unknown dual method '" + std::string(s) + "' (expected greedy, lp or both)");
}

inline std::string_view approach_name(DualApproach a) {
  switch (a) {
    case DualApproach::Direct: return "direct";
    case DualApproach::ContractedToSupport: return "contracted-to-support";
    case DualApproach::InfiniteConstraintsDropped: return "infinite-constraints-dropped";
  }
  return "unknown";
}

struct DualityReport {
  ExtReal choquet_value;
  ExtReal dual_value;
  AdditiveMeasure optimal_measure;
  Gap gap;  // choquet_value - dual_value
  DualMethod method = DualMethod::ExactLP;
  DualApproach approach = DualApproach::Direct;
  bool measure_dominated = true;
  std::optional<Rational> greedy_value;  // with DualMethod::Both
  std::size_t pivots = 0;
};

/// sup { Σ f μ : μ >= 0, μ(A) <= H(A) for all nonempty A } by exact simplex.
/// Returns +inf when the LP is unbounded (possible only when constraints
/// were dropped).
inline DualityReport lp_dual(const StepFunction& f, const Capacity& h, DualApproach approach) {
  const GroundSet u = h.universe();
  LinearProgram lp;
  for (int x = 0; x < u.size(); ++x) lp.c.push_back(f[x].value());
  for (std::size_t a = 1; a < h.size(); ++a) {
    const ExtReal& cap = h.at(static_cast<Mask>(a));
    if (cap.is_infinite()) continue;
    std::vector<Rational> row(static_cast<std::size_t>(u.size()), Rational(0));
    for (int x = 0; x < u.size(); ++x)
      if ((a >> x) & 1U) row[static_cast<std::size_t>(x)] = 1;
    lp.a.push_back(std::move(row));
    lp.b.push_back(cap.value());
  }
  const LpSolution sol = solve_lp(lp);
  DualityReport r{choquet_value(f, h), Rational(0), AdditiveMeasure::zero(u), {}, DualMethod::ExactLP, approach};
  r.pivots = sol.pivots;
  if (sol.status == LpSolution::Status::Unbounded) {
    r.dual_value = ExtReal::infinity();
    r.measure_dominated = false;
  } else {
    r.dual_value = sol.value;
    r.optimal_measure = AdditiveMeasure(u, sol.x);
    if (!(ExtReal(r.optimal_measure.integral(f)) == r.dual_value))
      throw InvariantViolation("LP measure does not attain the reported optimum");
    r.measure_dominated = is_dominated(r.optimal_measure, h);
    if (!r.measure_dominated) throw InvariantViolation("LP returned an infeasible measure");
  }
  r.gap = difference(r.choquet_value, r.dual_value, Rational(0));
  return r;
}

/// Dual representation of ∫ f dH. With infinite capacity values, H is first
/// contracted to the support of f when that yields a finite capacity with
/// the same integral and LP value (H monotone, H(supp f) < inf); otherwise
/// the infinite constraints, which are vacuous, are dropped.
inline DualityReport dual_value(const StepFunction& f, const Capacity& h, DualMethod method = DualMethod::ExactLP) {
  require_same(f.universe(), h.universe(), "dual_value");
  detail::require_finite_nonnegative(f, "dual_value");
  const GroundSet u = h.universe();

  if (method == DualMethod::Greedy) {
    AdditiveMeasure mu = greedy_measure(f, h);
    DualityReport r{choquet_value(f, h), mu.integral(f), mu, {}, DualMethod::Greedy, DualApproach::Direct};
    r.measure_dominated = is_dominated(mu, h);
    r.gap = difference(r.choquet_value, r.dual_value, Rational(0));
    return r;
  }

  if (u.size() > kMaxLpGroundSet)
    throw ValidationError("dual LP is limited to ground sets of size <= " + std::to_string(kMaxLpGroundSet) +
                          " (2^n - 1 constraints)");

  DualityReport r = [&] {
    if (h.is_finite()) return lp_dual(f, h, DualApproach::Direct);
    const SubsetMask support = superlevel(f, Rational(0), true);
    if (check_axiom(h, Axiom::Monotone).holds && h(support).is_finite()) {
      DualityReport c = lp_dual(f, contract(h, support), DualApproach::ContractedToSupport);
      c.measure_dominated = is_dominated(c.optimal_measure, h);
      return c;
    }
    return lp_dual(f, h, DualApproach::InfiniteConstraintsDropped);
  }();

  if (method == DualMethod::Both) {
    r.method = DualMethod::Both;
    try {
      r.greedy_value = greedy_measure(f, h).integral(f);
    } catch (const RefusalError&) {
      // greedy is undefined here (non-monotone H or an infinite prefix); the LP result stands
    }
  }
  return r;
}

struct DominationAudit {
  Rational lhs;  // Σ f μ
  ExtReal rhs;   // ∫ f dH
  bool holds;
  bool monotone;
  bool finitely_subadditive;
};

/// Σ f μ <= ∫ f dH for μ dominated by H. Refuses an undominated μ.
inline DominationAudit domination_inequality_audit(const StepFunction& f, const AdditiveMeasure& mu,
                                                   const Capacity& h) {
  require_same(f.universe(), h.universe(), "domination_inequality_audit");
  detail::require_finite_nonnegative(f, "domination_inequality_audit");
  if (auto bad = find_domination_violation(mu, h))
    throw RefusalError("measure is not dominated by H: μ(" + to_string(*bad) + ") = " + to_string(mu(*bad)) +
                       " > H = " + to_string(h(*bad)));
  DominationAudit a{mu.integral(f), choquet_value(f, h), false, check_axiom(h, Axiom::Monotone).holds,
                    check_axiom(h, Axiom::FiniteSubadditive).holds};
  a.holds = ExtReal(a.lhs) <= a.rhs;
  return a;
}

/// Random masses scaled into the feasible region of the dual LP.
inline AdditiveMeasure random_dominated_measure(const Capacity& h, Rng& rng, long max_numerator = 8,
                                                long den = 4) {
  const GroundSet u = h.universe();
  std::vector<Rational> masses;
  for (int x = 0; x < u.size(); ++x)
    masses.push_back(h.at(Mask{1} << x) == ExtReal(Rational(0)) ? Rational(0) : rng.rational(max_numerator, den));
  AdditiveMeasure mu(u, masses);
  std::optional<Rational> lambda;
  for (std::size_t a = 1; a < h.size(); ++a) {
    const SubsetMask s(u, static_cast<Mask>(a));
    const Rational m = mu(s);
    const ExtReal& cap = h.at(static_cast<Mask>(a));
    if (sgn(m) == 0 || cap.is_infinite()) continue;
    Rational ratio = cap.value() / m;
    if (!lambda || ratio < *lambda) lambda = ratio;
  }
  Rational scale = lambda ? std::min(*lambda, Rational(1)) : Rational(1);
  scale *= make_rational(rng.uniform(0, 16), 16);
  for (auto& m : masses) m *= scale;
  return {u, std::move(masses)};
}

struct SemifiniteDemoStep {
  ExtReal target;       // M
  SubsetMask witness;   // E ⊆ {f >= t} with M <= H(E) < inf
  ExtReal capacity;     // H(E)
  ExtReal bound;        // t · M
  ExtReal choquet_value;  // ∫ f dH_E
  ExtReal dual_value;     // LP value for H_E
  bool witnessed;       // dual_value >= bound
};

struct SemifiniteDemo {
  bool delegated = false;  // no superlevel set of infinite capacity
  std::optional<DualityReport> direct;
  Rational level;  // t: the largest level of f whose superlevel set has H = inf
  std::optional<SubsetMask> infinite_superlevel;
  ExtReal choquet_value;
  std::vector<SemifiniteDemoStep> steps;
};

/// For f with H({f >= t}) = inf, exhibits finite contractions H_E whose dual
/// values grow past t·M for every target M, so the supremum over dominated
/// measures is infinite along with ∫ f dH. Targets default to the strict
/// semifinite targets; any failure to reach a target refuses.
inline SemifiniteDemo semifinite_unboundedness_demo(const StepFunction& f, const Capacity& h,
                                                    std::optional<std::vector<ExtReal>> targets = std::nullopt) {
  require_same(f.universe(), h.universe(), "semifinite_unboundedness_demo");
  detail::require_finite_nonnegative(f, "semifinite_unboundedness_demo");
  const GroundSet u = h.universe();
  SemifiniteDemo demo;
  demo.choquet_value = choquet_value(f, h);

  const auto levels = detail::descending_levels(f);
  for (const auto& v : levels) {
    if (sgn(v) <= 0) continue;
    if (h(superlevel(f, v, false)).is_infinite()) {
      demo.level = v;
      demo.infinite_superlevel = superlevel(f, v, false);
      break;
    }
  }
  if (!demo.infinite_superlevel) {
    demo.delegated = true;
    demo.direct = dual_value(f, h);
    return demo;
  }

  const std::vector<ExtReal> ms = targets ? *targets : semifinite_targets(h);
  if (auto sf = check_semifinite(h, ms); !sf.holds)
    throw RefusalError("H is not semifinite: " + to_string(sf.witness->sets[0]) + " has infinite capacity but no subset " +
                       "with finite capacity >= " + to_string(sf.witness->values[1]) + " (best " +
                       to_string(sf.witness->values[2]) +
                       "); the canonical failure is H = 1 on nonempty bounded sets and inf otherwise");

  const Mask a = demo.infinite_superlevel->bits();
  for (const auto& m : ms) {
    std::optional<Mask> witness;
    for (Mask d = 0;; d = (d - a) & a) {  // subsets of A in increasing mask order
      if (h.at(d).is_finite() && h.at(d) >= m) {
        witness = d;
        break;
      }
      if (d == a) break;
    }
    if (!witness) throw InvariantViolation("semifinite check passed but no witness found");
    const SubsetMask e(u, *witness);
    const Capacity he = contract(h, e);
    DualityReport dr = dual_value(f, he);
    SemifiniteDemoStep step{m, e, h(e), mul(ExtReal(demo.level), m), dr.choquet_value, dr.dual_value, false};
    step.witnessed = step.dual_value >= step.bound;
    demo.steps.push_back(std::move(step));
  }
  return demo;
}

}  // namespace choquet

#endif  // CHOQUET_DUALITY_HPP
