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

#ifndef CHOQUET_INTEGRAL_HPP
#define CHOQUET_INTEGRAL_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "choquet/capacity.hpp"
#include "choquet/domain.hpp"

namespace choquet {

/// One term of the layer-cake sum: on the interval (level - gap, level]
/// the superlevel set has capacity `capacity`. The leading term for the
/// points where f = +inf has level = gap = +inf.
struct Layer {
  ExtReal level;
  ExtReal gap;
  ExtReal capacity;
};

struct IntegralValue {
  ExtReal value;
  std::vector<Layer> breakdown;
};

namespace detail {

/// Distinct finite positive values of f in decreasing order.
inline std::vector<Rational> descending_levels(const StepFunction& f) {
  std::vector<Rational> levels;
  for (const auto& v : f.values())
    if (v.is_finite() && sgn(v.value()) > 0) levels.push_back(v.value());
  std::sort(levels.begin(), levels.end(), [](const Rational& a, const Rational& b) { return a > b; });
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

inline void require_nonnegative(const StepFunction& f, const char* what) {
  if (!f.is_nonnegative()) throw ValidationError(std::string(what) + " requires a nonnegative function");
}

}  // namespace detail

/// ∫ f dH = ∫_0^inf H({f > t}) dt, as the exact finite sum
/// Σ (v_i - v_{i+1}) H({f >= v_i}) over the distinct values of f, with
/// the +inf part contributing inf * H({f = inf}) under 0 * inf = 0.
inline IntegralValue choquet(const StepFunction& f, const Capacity& h) {
  require_same(f.universe(), h.universe(), "choquet");
  detail::require_nonnegative(f, "choquet");
  IntegralValue out{Rational(0), {}};

  Mask infinite_bits = 0;
  for (int x = 0; x < f.size(); ++x)
    if (f[x].is_infinite()) infinite_bits |= Mask{1} << x;
  const SubsetMask infinite_part(f.universe(), infinite_bits);
  if (!infinite_part.is_empty()) {
    const ExtReal& cap = h(infinite_part);
    out.breakdown.push_back({ExtReal::infinity(), ExtReal::infinity(), cap});
    out.value += mul(ExtReal::infinity(), cap);
  }

  const auto levels = detail::descending_levels(f);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    Rational gap = levels[i] - (i + 1 < levels.size() ? levels[i + 1] : Rational(0));
    const ExtReal& cap = h(superlevel(f, levels[i], false));
    out.value += mul(ExtReal(gap), cap);
    out.breakdown.push_back({levels[i], std::move(gap), cap});
  }
  return out;
}

inline ExtReal choquet_value(const StepFunction& f, const Capacity& h) { return choquet(f, h).value; }

/// ‖f‖ = ∫ |f| dH, the L^1(H) norm of a signed function.
inline ExtReal l1_norm(const StepFunction& f, const Capacity& h) { return choquet_value(abs(f), h); }

/// ∫_a^b H({f > t}) dt for 0 <= a <= b (b may be +inf), exact.
inline ExtReal level_integral(const StepFunction& f, const Capacity& h, const Rational& a,
                              const ExtReal& b) {
  if (sgn(a) < 0 || b < ExtReal(a)) throw ValidationError("level_integral needs 0 <= a <= b");
  ExtReal total = Rational(0);
  for (const auto& layer : choquet(f, h).breakdown) {
    if (layer.level.is_infinite()) {
      if (b.is_infinite()) total += mul(ExtReal::infinity(), layer.capacity);
      continue;
    }
    const Rational top = layer.level.value();
    const Rational bottom = top - layer.gap.value();
    Rational lo = std::max(bottom, a);
    ExtReal hi = min(ExtReal(top), b);
    if (hi.is_finite() && hi.value() > lo) total += mul(ExtReal(Rational(hi.value() - lo)), layer.capacity);
  }
  return total;
}

struct StrictWeakComparison {
  ExtReal weak;
  ExtReal strict;
  bool equal;
};

/// Recomputes the integral with {f > t} on each open level interval and
/// compares it with the {f >= t} form.
inline StrictWeakComparison check_strict_vs_weak(const StepFunction& f, const Capacity& h) {
  require_same(f.universe(), h.universe(), "check_strict_vs_weak");
  detail::require_nonnegative(f, "check_strict_vs_weak");
  const ExtReal weak = choquet_value(f, h);

  ExtReal strict = Rational(0);
  const auto levels = detail::descending_levels(f);
  const Rational top = levels.empty() ? Rational(0) : levels.front();
  // (top, inf): only the points where f = +inf remain.
  const SubsetMask above_top = superlevel(f, top, true);
  if (!above_top.is_empty()) strict += mul(ExtReal::infinity(), h(above_top));
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Rational lower = i + 1 < levels.size() ? levels[i + 1] : Rational(0);
    strict += mul(ExtReal(Rational(levels[i] - lower)), h(superlevel(f, lower, true)));
  }
  return {weak, strict, weak == strict};
}

/// A difference of extended reals, where inf - inf has no value.
struct Gap {
  enum class Kind { Finite, PlusInfinity, MinusInfinity, Indeterminate };
  Kind kind = Kind::Finite;
  Rational value;

  bool is_finite() const { return kind == Kind::Finite; }
  /// True when the gap is known to be <= 0.
  bool nonpositive() const {
    return kind == Kind::MinusInfinity || (kind == Kind::Finite && sgn(value) <= 0);
  }

  friend bool operator==(const Gap& a, const Gap& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
};

inline std::string to_string(const Gap& g) {
  switch (g.kind) {
    case Gap::Kind::Finite: return to_string(g.value);
    case Gap::Kind::PlusInfinity: return "inf";
    case Gap::Kind::MinusInfinity: return "-inf";
    case Gap::Kind::Indeterminate: return "indeterminate";
  }
  return "?";
}

/// whole - (part1 + part2) with the extended-real conventions.
inline Gap difference(const ExtReal& whole, const ExtReal& part1, const ExtReal& part2) {
  const ExtReal parts = part1 + part2;
  if (whole.is_infinite() && parts.is_infinite()) return {Gap::Kind::Indeterminate, 0};
  if (whole.is_infinite()) return {Gap::Kind::PlusInfinity, 0};
  if (parts.is_infinite()) return {Gap::Kind::MinusInfinity, 0};
  return {Gap::Kind::Finite, whole.value() - parts.value()};
}

/// Orders gaps for maximization; indeterminate gaps are not comparable
/// and sort below everything.
inline bool gap_less(const Gap& a, const Gap& b) {
  auto rank = [](const Gap& g) {
    switch (g.kind) {
      case Gap::Kind::Indeterminate: return 0;
      case Gap::Kind::MinusInfinity: return 1;
      case Gap::Kind::Finite: return 2;
      case Gap::Kind::PlusInfinity: return 3;
    }
    return 0;
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  return a.kind == Gap::Kind::Finite && a.value < b.value;
}

/// ∫(f+g) dH - ∫f dH - ∫g dH.
inline Gap sublinearity_gap(const StepFunction& f, const StepFunction& g, const Capacity& h) {
  require_same(f.universe(), g.universe(), "sublinearity_gap");
  detail::require_nonnegative(f, "sublinearity_gap");
  detail::require_nonnegative(g, "sublinearity_gap");
  if (!f.is_finite() || !g.is_finite()) throw ValidationError("sublinearity_gap requires finite functions");
  return difference(choquet_value(add(f, g), h), choquet_value(f, h), choquet_value(g, h));
}

/// Default cap on the number of (f, g) pairs the exhaustive enumerator
/// visits; CHOQUET_BUDGET overrides it.
inline std::uint64_t enumeration_budget() {
  if (const char* env = std::getenv("CHOQUET_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10'000'000;
}

struct SublinearityReport {
  Gap max_gap;
  StepFunction argmax_f;
  StepFunction argmax_g;
  AxiomReport strong_subadditivity;
  bool consistent = false;  // (max gap <= 0) == strongly subadditive
  std::uint64_t pairs = 0;
  std::uint64_t indeterminate_pairs = 0;
};

/// Exhaustive two-sided check of "∫ is sublinear iff H is strongly
/// subadditive" over all pairs of functions with values in
/// {0, 1/k, 2/k, ..., m}. The grid contains every indicator, so the
/// "only if" direction is decided exactly.
///
/// Pairs are visited in order of their grid indices (point 0 is the least
/// significant digit); the reported argmax is the first maximizing pair
/// regardless of `jobs`.
inline SublinearityReport verify_sublinearity_equivalence(const Capacity& h, long m, long k,
                                                          std::uint64_t budget = enumeration_budget(),
                                                          unsigned jobs = 1) {
  if (m < 1 || k < 1) throw ValidationError("value bound m and denominator k must be >= 1");
  if (auto mono = check_axiom(h, Axiom::Monotone); !mono.holds)
    throw RefusalError("sublinearity equivalence assumes a monotone capacity; H fails monotonicity at " +
                       to_string(mono.witness->sets[0]) + " ⊆ " + to_string(mono.witness->sets[1]));

  const GroundSet u = h.universe();
  const int n = u.size();
  const long base = m * k + 1;
  const long sum_base = 2 * m * k + 1;
  long double pair_estimate = 1;
  for (int i = 0; i < 2 * n; ++i) pair_estimate *= static_cast<long double>(base);
  if (pair_estimate > static_cast<long double>(budget))
    throw ValidationError("enumeration of (" + std::to_string(base) + ")^" + std::to_string(2 * n) +
                          " pairs exceeds the budget of " + std::to_string(budget));

  std::uint64_t count = 1, sum_count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<std::uint64_t>(base);
    sum_count *= static_cast<std::uint64_t>(sum_base);
  }

  // Index digits are the numerators j_x, point 0 least significant (the
  // same convention as subset masks).
  auto decode = [n](std::uint64_t index, long b) {
    std::vector<long> d(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      d[static_cast<std::size_t>(x)] = static_cast<long>(index % static_cast<std::uint64_t>(b));
      index /= static_cast<std::uint64_t>(b);
    }
    return d;
  };
  auto make_function = [&](const std::vector<long>& d) {
    std::vector<ExtReal> values;
    for (long j : d) values.emplace_back(make_rational(j, static_cast<unsigned long>(k)));
    return StepFunction(u, std::move(values));
  };

  std::vector<ExtReal> single(count);
  std::vector<std::uint64_t> sum_offset(count);  // index of f in the doubled grid
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto d = decode(i, base);
    single[i] = choquet_value(make_function(d), h);
    std::uint64_t s = 0;
    for (int x = n - 1; x >= 0; --x)
      s = s * static_cast<std::uint64_t>(sum_base) + static_cast<std::uint64_t>(d[static_cast<std::size_t>(x)]);
    sum_offset[i] = s;
  }
  std::vector<ExtReal> summed(sum_count);
  for (std::uint64_t i = 0; i < sum_count; ++i) summed[i] = choquet_value(make_function(decode(i, sum_base)), h);

  struct Best {
    Gap gap{Gap::Kind::Indeterminate, 0};
    std::uint64_t f = 0, g = 0;
    bool found = false;
    std::uint64_t indeterminate = 0;
  };
  auto scan = [&](std::uint64_t f_begin, std::uint64_t f_end) {
    Best best;
    for (std::uint64_t fi = f_begin; fi < f_end; ++fi) {
      for (std::uint64_t gi = 0; gi < count; ++gi) {
        const Gap gap = difference(summed[sum_offset[fi] + sum_offset[gi]], single[fi], single[gi]);
        if (gap.kind == Gap::Kind::Indeterminate) {
          ++best.indeterminate;
          if (best.found) continue;
        }
        if (!best.found || gap_less(best.gap, gap)) {
          best.gap = gap;
          best.f = fi;
          best.g = gi;
          best.found = true;
        }
      }
    }
    return best;
  };

  Best best;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs == 1) {
    best = scan(0, count);
  } else {
    std::vector<Best> partial(jobs);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (count + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j)
      workers.emplace_back([&, j] {
        const std::uint64_t lo = std::min<std::uint64_t>(count, j * chunk);
        const std::uint64_t hi = std::min<std::uint64_t>(count, lo + chunk);
        if (lo < hi) partial[j] = scan(lo, hi);
      });
    for (auto& w : workers) w.join();
    // Chunks are in lexicographic order, so a strict improvement is needed
    // to displace an earlier chunk's maximizer.
    for (const auto& p : partial) {
      best.indeterminate += p.indeterminate;
      if (!p.found) continue;
      if (!best.found || gap_less(best.gap, p.gap)) {
        best.gap = p.gap;
        best.f = p.f;
        best.g = p.g;
        best.found = true;
      }
    }
  }

  SublinearityReport report{best.gap, make_function(decode(best.f, base)), make_function(decode(best.g, base)),
                            check_axiom(h, Axiom::StronglySubadditive)};
  report.pairs = count * count;
  report.indeterminate_pairs = best.indeterminate;
  report.consistent = best.gap.nonpositive() == report.strong_subadditivity.holds;
  return report;
}

struct TruncationTail {
  ExtReal integral;  // ∫ |T_k(f) - f| dH
  ExtReal tail;      // ∫_k^inf H({f > s}) ds, from the layer cake of f
  bool equal;
};

/// Computes ∫|T_k(f) - f| dH and the tail of the layer cake of f above k
/// independently and compares them exactly.
inline TruncationTail truncation_tail(const StepFunction& f, const Capacity& h, const Rational& k) {
  detail::require_nonnegative(f, "truncation_tail");
  if (sgn(k) <= 0) throw ValidationError("truncation height must be positive");
  // |T_k(f) - f| = (f - k)^+ for nonnegative f; +inf - k = +inf.
  const ExtReal integral = choquet_value(shifted_positive_part(f, k), h);

  ExtReal tail = Rational(0);
  for (const auto& layer : choquet(f, h).breakdown) {
    if (layer.level.is_infinite()) {
      tail += mul(ExtReal::infinity(), layer.capacity);
      continue;
    }
    const Rational top = layer.level.value();
    const Rational bottom = std::max(Rational(top - layer.gap.value()), k);
    if (top > bottom) tail += mul(ExtReal(Rational(top - bottom)), layer.capacity);
  }
  return {integral, tail, integral == tail};
}

struct QuasiSublinearity {
  ExtReal lhs;  // ∫ |g + h| dH
  ExtReal rhs;  // 2 ∫ |g| dH + 2 ∫ |h| dH
  bool holds;
  bool finitely_subadditive;  // the hypothesis the inequality rests on
};

/// ∫|g + h| dH <= 2∫|g| dH + 2∫|h| dH. Guaranteed when H is monotone and
/// finitely subadditive, because {|g+h| > t} ⊆ {|g| > t/2} ∪ {|h| > t/2}.
inline QuasiSublinearity quasi_sublinearity_check(const StepFunction& g, const StepFunction& hfun,
                                                  const Capacity& h) {
  require_same(g.universe(), hfun.universe(), "quasi_sublinearity_check");
  if (!g.is_finite() || !hfun.is_finite()) throw ValidationError("quasi-sublinearity needs finite functions");
  const ExtReal lhs = l1_norm(add(g, hfun), h);
  const ExtReal two = Rational(2);
  const ExtReal rhs = mul(two, l1_norm(g, h)) + mul(two, l1_norm(hfun, h));
  return {lhs, rhs, lhs <= rhs,
          check_axiom(h, Axiom::Monotone).holds && check_axiom(h, Axiom::FiniteSubadditive).holds};
}

}  // namespace choquet

#endif  // CHOQUET_INTEGRAL_HPP
