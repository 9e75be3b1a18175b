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

// Finite-prefix audits of quasi-uniform convergence and of the Fatou and
// dominated convergence estimates for Choquet integrals.
//
// A prefix f_0, ..., f_N cannot decide a limit. Every verdict here is
// relative to the prefix, and the (ε, η, tail) quantifiers of quasi-uniform
// convergence are exposed directly: on a finite ground set the set of points
// that still deviate by more than η in the tail is the smallest possible
// exceptional set, so convergence at tolerance (ε, η) holds iff its capacity
// is at most ε.

#ifndef CHOQUET_CONVERGENCE_HPP
#define CHOQUET_CONVERGENCE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "choquet/integral.hpp"

namespace choquet {

struct ScheduleEntry {
  Rational eps;
  SubsetMask set;
};

class FunctionSequence {
 public:
  FunctionSequence(std::vector<StepFunction> terms, StepFunction limit, std::vector<ScheduleEntry> schedule = {})
      : terms_(std::move(terms)), limit_(std::move(limit)), schedule_(std::move(schedule)) {
    if (terms_.empty()) throw ValidationError("sequence needs at least one term");
    for (std::size_t n = 0; n < terms_.size(); ++n) {
      require_same(limit_.universe(), terms_[n].universe(), "sequence term");
      if (!terms_[n].is_finite()) throw ValidationError("term " + std::to_string(n) + " has an infinite value");
    }
    if (!limit_.is_finite()) throw ValidationError("limit has an infinite value");
    for (const auto& s : schedule_) {
      require_same(limit_.universe(), s.set.universe(), "schedule set");
      if (sgn(s.eps) < 0) throw ValidationError("schedule ε must be nonnegative");
    }
  }

  const GroundSet& universe() const { return limit_.universe(); }
  const std::vector<StepFunction>& terms() const { return terms_; }
  const StepFunction& operator[](std::size_t n) const { return terms_[n]; }
  std::size_t size() const { return terms_.size(); }
  const StepFunction& limit() const { return limit_; }
  const std::vector<ScheduleEntry>& schedule() const { return schedule_; }

 private:
  std::vector<StepFunction> terms_;
  StepFunction limit_;
  std::vector<ScheduleEntry> schedule_;
};

enum class QuVerdict { Verified, Refuted, InsufficientPrefix };

inline std::string_view verdict_name(QuVerdict v) {
  switch (v) {
    case QuVerdict::Verified: return "verified";
    case QuVerdict::Refuted: return "refuted";
    case QuVerdict::InsufficientPrefix: return "insufficient-prefix";
  }
  return "unknown";
}

/// lhs <= rhs, or lhs = rhs for identities.
struct NamedCheck {
  std::string name;
  ExtReal lhs;
  ExtReal rhs;
  bool equality = false;
  bool holds = false;
};

inline NamedCheck le_check(std::string name, ExtReal lhs, ExtReal rhs) {
  const bool holds = lhs <= rhs;
  return {std::move(name), std::move(lhs), std::move(rhs), false, holds};
}
inline NamedCheck eq_check(std::string name, ExtReal lhs, ExtReal rhs) {
  const bool holds = lhs == rhs;
  return {std::move(name), std::move(lhs), std::move(rhs), true, holds};
}

struct ConvergenceAudit {
  QuVerdict qu_verdict = QuVerdict::Verified;
  std::optional<SubsetMask> minimal_bad_set;
  std::vector<NamedCheck> checks;
  std::optional<int> witness_point;          // with Refuted
  std::optional<std::size_t> witness_index;  // last n at which the witness point deviates
  std::vector<ExtReal> values;               // ∫|f_n - f| dH where the audit computes it
  std::vector<ExtReal> envelope;             // sup_{m >= n} of `values`
  bool stalled = false;
  std::vector<std::string> notes;

  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.holds; });
  }
  const NamedCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.holds) return &c;
    return nullptr;
  }
};

/// |f_n - f|.
inline StepFunction deviation(const StepFunction& fn, const StepFunction& f) { return abs(sub(fn, f)); }

/// {x : |f_n(x) - f(x)| > η for some n >= from}.
inline SubsetMask tail_bad_set(const FunctionSequence& seq, const Rational& eta, std::size_t from) {
  SubsetMask bad = SubsetMask::empty(seq.universe());
  for (std::size_t n = from; n < seq.size(); ++n) bad = bad | superlevel(deviation(seq[n], seq.limit()), eta, true);
  return bad;
}

namespace detail {

inline void require_positive(const Rational& v, const char* what) {
  if (sgn(v) <= 0) throw ValidationError(std::string(what) + " must be positive");
}

inline void require_hypotheses(const Capacity& h, std::initializer_list<Axiom> axioms, const char* what) {
  for (Axiom a : axioms) {
    if (auto r = check_axiom(h, a); !r.holds) {
      std::string where;
      for (const auto& s : r.witness->sets) where += (where.empty() ? "" : ", ") + to_string(s);
      throw RefusalError(std::string(what) + " assumes " + std::string(axiom_name(a)) + ", which fails at " + where);
    }
  }
}

/// Smallest N >= from such that |f_n - f| <= η off E for every n >= N, or
/// nothing when the last term still deviates off E.
inline std::optional<std::size_t> stabilization_index(const FunctionSequence& seq, const Rational& eta,
                                                      const SubsetMask& e, std::size_t from) {
  std::size_t n = seq.size();
  while (n > from) {
    const SubsetMask off = superlevel(deviation(seq[n - 1], seq.limit()), eta, true).minus(e);
    if (!off.is_empty()) break;
    --n;
  }
  if (n == seq.size()) return std::nullopt;
  return n;
}

/// Exceptional sets to audit: the schedule, or the tail bad set itself.
inline std::vector<ScheduleEntry> exceptional_sets(const FunctionSequence& seq, const Capacity& h,
                                                   const Rational& eta, std::size_t from) {
  if (!seq.schedule().empty()) return seq.schedule();
  const SubsetMask bad = tail_bad_set(seq, eta, from);
  const ExtReal cap = h(bad);
  if (cap.is_infinite()) return {};
  return {{cap.value(), bad}};
}

inline std::string label(std::string_view base, std::size_t j) {
  return std::string(base) + "[" + std::to_string(j) + "]";
}
inline std::string label(std::string_view base, std::size_t j, std::size_t n) {
  return std::string(base) + "[" + std::to_string(j) + "][" + std::to_string(n) + "]";
}

}  // namespace detail

/// Quasi-uniform bookkeeping at tolerance (ε, η) over the tail starting at
/// `tail_start`. Without ε the verdict is for every ε > 0, which on a finite
/// ground set means H(B) = 0.
inline ConvergenceAudit qu_audit(const FunctionSequence& seq, const Capacity& h, const Rational& eta,
                                 std::size_t tail_start, std::optional<Rational> eps = std::nullopt) {
  require_same(seq.universe(), h.universe(), "qu_audit");
  detail::require_positive(eta, "η");
  if (tail_start >= seq.size())
    throw ValidationError("tail start " + std::to_string(tail_start) + " is beyond the last term " +
                          std::to_string(seq.size() - 1));

  ConvergenceAudit audit;
  const SubsetMask bad = tail_bad_set(seq, eta, tail_start);
  audit.minimal_bad_set = bad;
  const Rational target = eps.value_or(Rational(0));
  audit.checks.push_back(le_check("H(B) <= eps", h(bad), target));

  for (std::size_t j = 0; j < seq.schedule().size(); ++j) {
    const auto& entry = seq.schedule()[j];
    audit.checks.push_back(le_check(detail::label("schedule capacity", j), h(entry.set), entry.eps));
    audit.checks.push_back(le_check(detail::label("schedule covers B", j),
                                    Rational(bad.minus(entry.set).count()), Rational(0)));
  }

  if (seq.size() - tail_start < 2) {
    audit.qu_verdict = QuVerdict::InsufficientPrefix;
    audit.notes.push_back("the tail has a single term");
    return audit;
  }
  if (h(bad) <= ExtReal(target)) {
    audit.qu_verdict = QuVerdict::Verified;
    return audit;
  }

  audit.qu_verdict = QuVerdict::Refuted;
  Mask scheduled = 0;
  for (const auto& entry : seq.schedule()) scheduled |= entry.set.bits();
  const SubsetMask unscheduled = bad.minus(SubsetMask(seq.universe(), scheduled));
  const auto points = (unscheduled.is_empty() ? bad : unscheduled).points();
  const int x = points.front();
  audit.witness_point = x;
  for (std::size_t n = seq.size(); n-- > tail_start;)
    if (deviation(seq[n], seq.limit())[x] > ExtReal(eta)) {
      audit.witness_index = n;
      break;
    }
  return audit;
}

/// 2^{-n} H({|f_n - f| > 2^{-n}}) <= ∫ |f_n - f| dH.
inline NamedCheck chebyshev_audit(const StepFunction& fn, const StepFunction& f, const Capacity& h, long n) {
  require_same(fn.universe(), f.universe(), "chebyshev_audit");
  if (n < 0) throw ValidationError("index n must be >= 0");
  const StepFunction g = deviation(fn, f);
  const Rational t = pow2(-n);
  return le_check("chebyshev[" + std::to_string(n) + "]", mul(ExtReal(t), h(superlevel(g, t, true))),
                  choquet_value(g, h));
}

struct FatouOptions {
  Rational eta{1, 8};
  Rational k{1};
  std::size_t tail_start = 0;
};

namespace detail {

inline ConvergenceAudit fatou_core(const FunctionSequence& seq, const Capacity& h, const FatouOptions& opt) {
  ConvergenceAudit audit;
  const StepFunction& f = seq.limit();
  audit.minimal_bad_set = tail_bad_set(seq, opt.eta, opt.tail_start);
  const ExtReal window = level_integral(f, h, opt.eta, ExtReal(Rational(opt.k + opt.eta)));
  const bool window_covers_f = opt.k + opt.eta >= max_finite_value(f);
  if (!window_covers_f) audit.notes.push_back("k + η is below max f; the final Fatou bound is not evaluated");

  const auto sets = exceptional_sets(seq, h, opt.eta, opt.tail_start);
  if (sets.empty()) {
    audit.qu_verdict = QuVerdict::Refuted;
    audit.notes.push_back("the tail bad set has infinite capacity");
    return audit;
  }
  for (std::size_t j = 0; j < sets.size(); ++j) {
    const auto& [eps, e] = sets[j];
    audit.checks.push_back(le_check(label("exceptional capacity", j), h(e), eps));
    if (h(e) > ExtReal(eps)) audit.qu_verdict = QuVerdict::Refuted;
    const auto start = stabilization_index(seq, opt.eta, e, opt.tail_start);
    if (!start) {
      if (audit.qu_verdict == QuVerdict::Verified) audit.qu_verdict = QuVerdict::InsufficientPrefix;
      audit.notes.push_back(label("no stabilization off exceptional set", j));
      continue;
    }
    const ExtReal slack_k = mul(ExtReal(eps), ExtReal(opt.k));
    ExtReal tail_min = ExtReal::infinity();
    for (std::size_t n = *start; n < seq.size(); ++n) {
      const ExtReal in = choquet_value(seq[n], h);
      tail_min = min(tail_min, in);
      audit.checks.push_back(le_check(label("fatou window", j, n), window, in + slack_k));
    }
    if (window_covers_f)
      audit.checks.push_back(le_check(label("fatou", j), choquet_value(f, h),
                                      tail_min + slack_k + mul(ExtReal(opt.eta), h(superlevel(f, 0, true)))));
  }
  return audit;
}

}  // namespace detail

/// Checks ∫_η^{k+η} H({f > s}) ds <= ∫ f_n dH + ε k for every n past the
/// point where |f_n - f| <= η off the exceptional set, and, when k + η >= max f,
/// ∫ f dH <= min over that tail of ∫ f_n dH + ε k + η H({f > 0}).
/// Refuses unless H is monotone and finitely subadditive.
inline ConvergenceAudit fatou_harness(const FunctionSequence& seq, const Capacity& h, const FatouOptions& opt = {}) {
  require_same(seq.universe(), h.universe(), "fatou_harness");
  detail::require_positive(opt.eta, "η");
  detail::require_positive(opt.k, "k");
  for (const auto& t : seq.terms())
    if (!t.is_nonnegative()) throw ValidationError("Fatou needs nonnegative terms");
  if (!seq.limit().is_nonnegative()) throw ValidationError("Fatou needs a nonnegative limit");
  detail::require_hypotheses(h, {Axiom::Monotone, Axiom::FiniteSubadditive}, "Fatou");
  return detail::fatou_core(seq, h, opt);
}

struct FatouCounterexample {
  FunctionSequence sequence;
  FatouOptions options;
  ConvergenceAudit audit;  // contains the violated window check
};

/// From a finite-subadditivity violation H(E∪F) > H(E) + H(F): the constant
/// sequence χ_E converges to χ_{E∪F} off F, and the window bound fails.
inline std::optional<FatouCounterexample> fatou_counterexample_search(const Capacity& h) {
  auto violation = check_axiom(h, Axiom::FiniteSubadditive);
  if (violation.holds) return std::nullopt;
  const SubsetMask e = violation.witness->sets[0];
  const SubsetMask f = violation.witness->sets[1];
  const Rational he = h(e).value(), hf = h(f).value();
  FatouOptions opt;
  opt.k = 1;
  const ExtReal& hu = h(e | f);
  opt.eta = hu.is_infinite() ? Rational(1, 2) : Rational((hu.value() - he - hf) / (2 * hu.value()));
  std::vector<StepFunction> terms(3, indicator(e));
  FunctionSequence seq(std::move(terms), indicator(e | f), {{hf, f}});
  ConvergenceAudit audit = detail::fatou_core(seq, h, opt);
  if (audit.all_hold()) return std::nullopt;
  return FatouCounterexample{std::move(seq), opt, std::move(audit)};
}

struct DctOptions {
  Rational eta{1, 8};
  Rational k{2};
  std::size_t tail_start = 0;
};

/// Dominated convergence bookkeeping: the values ∫|f_n - f| dH and their
/// decreasing envelope, and for each n past stabilization off an
/// exceptional set E the split of ∫|f_n - f| at η and k with the bounds
///   ∫_0^η   <= η H({F > 0}),
///   ∫_η^k   <= (k - η) H(E),
///   ∫_k^inf <= ∫_k^inf H({2F > t}) dt.
/// `stalled` is set when the envelope is positive and has not decreased
/// over the second half of the prefix.
inline ConvergenceAudit dct_harness(const FunctionSequence& seq, const StepFunction& dominator, const Capacity& h,
                                    const DctOptions& opt = {}) {
  require_same(seq.universe(), h.universe(), "dct_harness");
  require_same(seq.universe(), dominator.universe(), "dct_harness");
  detail::require_positive(opt.eta, "η");
  if (opt.k <= opt.eta) throw ValidationError("dct split needs k > η");
  if (!dominator.is_nonnegative()) throw ValidationError("dominator must be nonnegative");
  if (choquet_value(dominator, h).is_infinite()) throw ValidationError("dominator has infinite Choquet integral");
  const int npts = seq.universe().size();
  for (std::size_t n = 0; n <= seq.size(); ++n) {
    const StepFunction& fn = n < seq.size() ? seq[n] : seq.limit();
    for (int x = 0; x < npts; ++x)
      if (abs(fn)[x] > dominator[x])
        throw ValidationError("domination fails at " + (n < seq.size() ? "n=" + std::to_string(n) : std::string("the limit")) +
                              ", x=" + std::to_string(x));
  }
  detail::require_hypotheses(h, {Axiom::Monotone, Axiom::FiniteSubadditive}, "dominated convergence");

  ConvergenceAudit audit;
  audit.minimal_bad_set = tail_bad_set(seq, opt.eta, opt.tail_start);
  for (const auto& fn : seq.terms()) audit.values.push_back(choquet_value(deviation(fn, seq.limit()), h));
  audit.envelope = audit.values;
  for (std::size_t n = audit.envelope.size() - 1; n-- > 0;)
    audit.envelope[n] = max(audit.envelope[n], audit.envelope[n + 1]);
  const ExtReal& last = audit.envelope.back();
  audit.stalled = ExtReal(Rational(0)) < last && audit.envelope[audit.envelope.size() / 2] == last;

  const ExtReal b1 = mul(ExtReal(opt.eta), h(superlevel(dominator, 0, true)));
  const ExtReal b3 = level_integral(scale(dominator, 2), h, opt.k, ExtReal::infinity());
  const auto sets = detail::exceptional_sets(seq, h, opt.eta, opt.tail_start);
  for (std::size_t j = 0; j < sets.size(); ++j) {
    const auto& [eps, e] = sets[j];
    audit.checks.push_back(le_check(detail::label("exceptional capacity", j), h(e), eps));
    const auto start = detail::stabilization_index(seq, opt.eta, e, opt.tail_start);
    if (!start) {
      audit.qu_verdict = QuVerdict::InsufficientPrefix;
      audit.notes.push_back(detail::label("no stabilization off exceptional set", j));
      continue;
    }
    const ExtReal b2 = mul(ExtReal(Rational(opt.k - opt.eta)), h(e));
    for (std::size_t n = *start; n < seq.size(); ++n) {
      const StepFunction g = deviation(seq[n], seq.limit());
      const ExtReal p1 = level_integral(g, h, 0, ExtReal(opt.eta));
      const ExtReal p2 = level_integral(g, h, opt.eta, ExtReal(opt.k));
      const ExtReal p3 = level_integral(g, h, opt.k, ExtReal::infinity());
      audit.checks.push_back(eq_check(detail::label("dct split", j, n), p1 + p2 + p3, audit.values[n]));
      audit.checks.push_back(le_check(detail::label("dct piece below eta", j, n), p1, b1));
      audit.checks.push_back(le_check(detail::label("dct piece eta to k", j, n), p2, b2));
      audit.checks.push_back(le_check(detail::label("dct piece above k", j, n), p3, b3));
      audit.checks.push_back(le_check(detail::label("dct bound", j, n), audit.values[n], b1 + b2 + b3));
    }
  }
  if (sets.empty()) {
    audit.qu_verdict = QuVerdict::Refuted;
    audit.notes.push_back("the tail bad set has infinite capacity");
  }
  return audit;
}

/// The converse of dominated convergence under ∫|f_n - f| dH <= 4^{-n}
/// (n counted from 0): checks the Chebyshev step, the sets
/// A_k = ∪_{n >= k} {|f_n - f| > 2^{-n}} with H(A_k) <= 2^{-(k-1)}, the
/// partial sums ∫Σ_{n<=j}|f_n - f| <= Σ 2^{n+1}∫|f_n - f| <= 4, and
/// F = |f| + Σ|f_n - f| with ∫F dH <= 2∫|f| dH + 8.
inline ConvergenceAudit converse_dct_audit(const FunctionSequence& seq, const Capacity& h) {
  require_same(seq.universe(), h.universe(), "converse_dct_audit");
  const StepFunction& f = seq.limit();
  const ExtReal norm_f = l1_norm(f, h);
  if (norm_f.is_infinite()) throw ValidationError("∫|f| dH must be finite");
  detail::require_hypotheses(h, {Axiom::Monotone, Axiom::CountableSubadditive}, "the converse of dominated convergence");

  ConvergenceAudit audit;
  std::vector<StepFunction> g;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    g.push_back(deviation(seq[n], f));
    audit.values.push_back(choquet_value(g.back(), h));
    if (audit.values.back() > ExtReal(pow2(-2 * static_cast<long>(n))))
      throw RefusalError("premise ∫|f_n - f| dH <= 4^-n fails first at n=" + std::to_string(n) + " (value " +
                         to_string(audit.values.back()) + ")");
  }

  std::vector<SubsetMask> level_sets;  // {|f_n - f| > 2^{-n}}
  for (std::size_t n = 0; n < seq.size(); ++n) {
    level_sets.push_back(superlevel(g[n], pow2(-static_cast<long>(n)), true));
    audit.checks.push_back(chebyshev_audit(seq[n], f, h, static_cast<long>(n)));
  }
  for (std::size_t k = 0; k < seq.size(); ++k) {
    SubsetMask a = SubsetMask::empty(seq.universe());
    ExtReal sum = Rational(0);
    for (std::size_t n = k; n < seq.size(); ++n) {
      a = a | level_sets[n];
      sum += h(level_sets[n]);
    }
    audit.checks.push_back(le_check("A_k subadditivity[" + std::to_string(k) + "]", h(a), sum));
    audit.checks.push_back(le_check("A_k bound[" + std::to_string(k) + "]", h(a), pow2(1 - static_cast<long>(k))));
    if (k + 1 == seq.size()) audit.minimal_bad_set = a;
  }

  StepFunction partial = StepFunction::zero(seq.universe());
  ExtReal weighted = Rational(0);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    partial = add(partial, g[j]);
    weighted += mul(ExtReal(pow2(static_cast<long>(j) + 1)), audit.values[j]);
    audit.checks.push_back(le_check("partial sum chain[" + std::to_string(j) + "]", choquet_value(partial, h), weighted));
    audit.checks.push_back(le_check("partial sum bound[" + std::to_string(j) + "]", weighted, Rational(4)));
  }
  const StepFunction big_f = add(abs(f), partial);
  const ExtReal two = Rational(2);
  audit.checks.push_back(le_check("F quasi-sublinearity", choquet_value(big_f, h),
                                  mul(two, norm_f) + mul(two, choquet_value(partial, h))));
  audit.checks.push_back(le_check("F bound", choquet_value(big_f, h), mul(two, norm_f) + ExtReal(Rational(8))));
  if (!audit.all_hold()) audit.qu_verdict = QuVerdict::Refuted;
  return audit;
}

/// ∫ F dH <= Σ ∫ f_n dH for nonnegative terms whose partial sums reach F.
/// Each partial sum is checked too. Refuses unless H is monotone and
/// strongly subadditive. If the last partial sum differs from F on a set of
/// positive capacity the verdict is InsufficientPrefix.
inline ConvergenceAudit countable_sublinearity_audit(const FunctionSequence& seq, const Capacity& h) {
  require_same(seq.universe(), h.universe(), "countable_sublinearity_audit");
  for (const auto& t : seq.terms())
    if (!t.is_nonnegative()) throw ValidationError("countable sublinearity needs nonnegative terms");
  detail::require_hypotheses(h, {Axiom::Monotone, Axiom::StronglySubadditive}, "countable sublinearity");

  ConvergenceAudit audit;
  StepFunction partial = StepFunction::zero(seq.universe());
  ExtReal sum = Rational(0);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    partial = add(partial, seq[j]);
    sum += choquet_value(seq[j], h);
    audit.checks.push_back(le_check("partial sum[" + std::to_string(j) + "]", choquet_value(partial, h), sum));
  }
  const StepFunction& big_f = seq.limit();
  Mask differs = 0;
  for (int x = 0; x < seq.universe().size(); ++x)
    if (!(partial[x] == big_f[x])) differs |= Mask{1} << x;
  const SubsetMask d(seq.universe(), differs);
  audit.minimal_bad_set = d;
  if (!is_zero(h(d))) {
    audit.qu_verdict = QuVerdict::InsufficientPrefix;
    audit.notes.push_back("partial sums differ from F on " + to_string(d));
  }
  audit.checks.push_back(le_check("countable sublinearity", choquet_value(big_f, h), sum));
  return audit;
}

struct SublinearityCounterexample {
  SubsetMask e;
  SubsetMask f;
  ExtReal lhs;  // ∫ (χ_E + χ_F) dH = H(E∩F) + H(E∪F)
  ExtReal rhs;  // H(E) + H(F)
};

/// Under a capacity that is not strongly subadditive, the two-term
/// sequence χ_E, χ_F breaks the inequality.
inline std::optional<SublinearityCounterexample> countable_sublinearity_counterexample(const Capacity& h) {
  auto v = find_strong_subadditivity_violation(h);
  if (!v) return std::nullopt;
  const auto& [e, f] = *v;
  const ExtReal lhs = choquet_value(add(indicator(e), indicator(f)), h);
  const ExtReal rhs = h(e) + h(f);
  if (!(rhs < lhs)) return std::nullopt;
  return SublinearityCounterexample{e, f, lhs, rhs};
}

}  // namespace choquet

#endif  // CHOQUET_CONVERGENCE_HPP
