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

// Property suite over a seeded corpus. Every property is counted; a failed
// instance keeps its first witness.

#ifndef CHOQUET_TOOLS_SUITE_HPP
#define CHOQUET_TOOLS_SUITE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace choquet::suite {

using io::json;

struct SuiteConfig {
  std::uint64_t seed = 7;
  int n = 3;                  // ground sets of size 1..n
  int per_kind = 3;           // capacities per generator kind and size
  int functions = 8;          // random functions per capacity
  long m = 3;                 // sublinearity grid {0, 1/k, ..., m}
  long k = 2;
  int sublinearity_max_n = 3;
  std::uint64_t budget = enumeration_budget();
  int hausdorff_dim = 1;
  int hausdorff_depth = 2;
  std::vector<Rational> betas{Rational(1, 2), Rational(1), Rational(3, 2)};
  unsigned jobs = 1;
};

inline void validate(const SuiteConfig& c) {
  if (c.n < 1 || c.n > 6) throw ValidationError("suite --n must be in [1, 6]");
  if (c.per_kind < 1 || c.functions < 1) throw ValidationError("suite counts must be positive");
  if (c.m < 1 || c.k < 1) throw ValidationError("suite grid needs m, k >= 1");
  if (c.hausdorff_dim < 1 || c.hausdorff_dim * c.hausdorff_depth > 4)
    throw ValidationError("suite dyadic domain must have at most 16 cells");
  if (c.jobs < 1) throw ValidationError("suite --jobs must be >= 1");
}

struct PropertyResult {
  std::string module;
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::optional<json> witness;
};

class Tally {
 public:
  void record(const std::string& module, const std::string& name, bool ok,
              const std::function<json()>& witness = nullptr) {
    PropertyResult& p = slot(module, name);
    ++p.checked;
    if (ok) return;
    ++p.failed;
    if (!p.witness) p.witness = witness ? witness() : json(nullptr);
  }
  /// Registers a property that had no applicable instance.
  void touch(const std::string& module, const std::string& name) { slot(module, name); }

  const std::vector<PropertyResult>& results() const { return results_; }
  bool ok() const {
    return std::all_of(results_.begin(), results_.end(), [](const PropertyResult& p) { return p.failed == 0; });
  }

 private:
  PropertyResult& slot(const std::string& module, const std::string& name) {
    const std::string key = module + "/" + name;
    auto it = index_.find(key);
    if (it == index_.end()) {
      it = index_.emplace(key, results_.size()).first;
      results_.push_back({module, name});
    }
    return results_[it->second];
  }
  std::map<std::string, std::size_t> index_;
  std::vector<PropertyResult> results_;
};

struct CorpusEntry {
  Capacity h;
  CapacityKind kind;
  std::uint64_t seed;
};

inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr CapacityKind kKinds[] = {
    CapacityKind::RandomMonotone,        CapacityKind::RandomSubmodularMonotone, CapacityKind::Additive,
    CapacityKind::Threshold,             CapacityKind::ThresholdInfinite,        CapacityKind::RandomMonotoneInfinite,
    CapacityKind::RandomSubmodularInfinite,
};

inline std::vector<CorpusEntry> build_corpus(std::uint64_t seed, int max_n, int per_kind) {
  std::vector<CorpusEntry> corpus;
  for (int n = 1; n <= max_n; ++n)
    for (std::size_t ki = 0; ki < std::size(kKinds); ++ki)
      for (int r = 0; r < per_kind; ++r) {
        const std::uint64_t s = mix(seed ^ mix(static_cast<std::uint64_t>(n) * 1000003ULL + ki * 1009ULL + r));
        GeneratorOptions opt;
        opt.threshold = r % n;
        corpus.push_back({generate_capacity(kKinds[ki], GroundSet(n), s, opt), kKinds[ki], s});
      }
  return corpus;
}

inline json describe(const CorpusEntry& c) {
  return {{"kind", kind_name(c.kind)}, {"seed", c.seed}, {"capacity", io::to_json(c.h)}};
}

inline bool has(const Capacity& h, Axiom a) { return check_axiom(h, a).holds; }

/// Midpoint Riemann sum of t -> H({f > t}) over [0, max f].
inline Rational riemann_midpoint(const StepFunction& f, const Capacity& h, const Rational& step) {
  const Rational top = max_finite_value(f);
  Rational sum(0);
  for (Rational t = step / 2; t < top; t += step) sum += h(superlevel(f, t, true)).value();
  return sum * step;
}

/// Brute-force dyadic content: the cheapest antichain of cubes covering E.
inline DyadicPowerSum brute_force_content(const DyadicCellSet& e, const Rational& beta) {
  const DyadicDomain dom = e.domain();
  const int d = dom.dimension(), l = dom.depth();
  struct Cube {
    int level;
    std::size_t first, last;  // finest-cell Morton range [first, last)
  };
  std::vector<Cube> cubes;
  for (int k = 0; k <= l; ++k) {
    const std::size_t width = std::size_t{1} << (d * (l - k));
    for (std::size_t j = 0; j < dom.cubes_at(k); ++j) cubes.push_back({k, j * width, (j + 1) * width});
  }
  const auto want = e.indices();
  std::optional<DyadicPowerSum> best;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cubes.size()); ++pick) {
    std::vector<char> covered(dom.cell_count(), 0);
    bool antichain = true;
    DyadicPowerSum cost;
    for (std::size_t c = 0; c < cubes.size() && antichain; ++c) {
      if (!((pick >> c) & 1U)) continue;
      for (std::size_t i = cubes[c].first; i < cubes[c].last; ++i) {
        if (covered[i]) antichain = false;
        covered[i] = 1;
      }
      cost += DyadicPowerSum::power(cubes[c].level, beta);
    }
    if (!antichain) continue;
    if (!std::all_of(want.begin(), want.end(), [&](std::size_t i) { return covered[i] != 0; })) continue;
    if (!best || cost < *best) best = cost;
  }
  return *best;
}

namespace detail {

inline void domain_properties(Tally& t, const std::vector<CorpusEntry>& corpus, const SuiteConfig& cfg) {
  const std::string mod = "domain";
  for (const auto& c : corpus) {
    Rng rng(mix(c.seed ^ 0xd0));
    for (int i = 0; i < cfg.functions; ++i) {
      const StepFunction f = random_function(c.h.universe(), rng, 12, 4);
      const Rational t1 = rng.rational(12, 4), t2 = t1 + rng.rational(4, 4) + Rational(1, 8);
      for (bool strict : {false, true})
        t.record(mod, "superlevel-nested", superlevel(f, t2, strict).is_subset_of(superlevel(f, t1, strict)),
                 [&] { return json{{"f", io::to_json(f)}, {"t", to_string(t1)}, {"t_prime", to_string(t2)}}; });
      const Rational k = rng.rational(8, 4) + Rational(1, 4);
      const Rational t0 = rng.rational(12, 4);
      for (bool strict : {false, true}) {
        const SubsetMask lhs = superlevel(truncate(f, k), t0, strict);
        // At t = k the weak superlevel set of T_k f is {f >= k}.
        const bool ok = t0 < k || (t0 == k && !strict) ? lhs == superlevel(f, t0, strict) : lhs.is_empty();
        t.record(mod, "truncate-superlevel", ok,
                 [&] { return json{{"f", io::to_json(f)}, {"k", to_string(k)}, {"t", to_string(t0)}}; });
      }
      const long kk = rng.uniform(1, 5);
      const StepFunction fl = floor_scale(f, kk);
      bool ok = true;
      for (int x = 0; x < f.size(); ++x)
        ok = ok && fl[x] <= f[x] && f[x].value() - fl[x].value() < Rational(1, kk);
      t.record(mod, "floor-scale-bounds", ok, [&] { return json{{"f", io::to_json(f)}, {"k", kk}}; });
      const SubsetMask a = random_subset(c.h.universe(), rng), b = random_subset(c.h.universe(), rng);
      const StepFunction s = add(indicator(a), indicator(b));
      bool two_on_meet = true;
      for (int x = 0; x < s.size(); ++x) two_on_meet = two_on_meet && ((s[x] == ExtReal(Rational(2))) == (a & b).contains(x));
      t.record(mod, "indicator-sum", two_on_meet,
               [&] { return json{{"a", io::to_json(a)}, {"b", io::to_json(b)}}; });
    }
  }
}

inline void capacity_properties(Tally& t, const std::vector<CorpusEntry>& corpus) {
  const std::string mod = "capacity";
  for (const auto& c : corpus) {
    for (Axiom a : kAllAxioms) {
      const AxiomReport r = check_axiom(c.h, a);
      if (r.holds) continue;
      t.record(mod, "witness-soundness", witness_violates(c.h, r), [&] { return io::to_json(r); });
    }
    t.touch(mod, "witness-soundness");
    if (!has(c.h, Axiom::Monotone)) continue;
    const Capacity reg = regularize(c.h);
    bool agrees = true;
    for (std::size_t a = 0; a < c.h.size(); ++a)
      if (c.h.at(static_cast<Mask>(a)).is_finite()) agrees = agrees && reg.at(static_cast<Mask>(a)) == c.h.at(static_cast<Mask>(a));
    t.record(mod, "regularize-agrees-on-finite", agrees, [&] { return describe(c); });
    t.record(mod, "regularize-semifinite", check_axiom(reg, Axiom::Semifinite).holds, [&] { return describe(c); });
    for (Axiom a : {Axiom::FiniteSubadditive, Axiom::CountableSubadditive, Axiom::StronglySubadditive}) {
      if (!has(c.h, a)) continue;
      t.record(mod, "regularize-inherits-" + std::string(axiom_name(a)), has(reg, a), [&] { return describe(c); });
    }
    const bool ssa = has(c.h, Axiom::StronglySubadditive);
    Rng rng(mix(c.seed ^ 0xca));
    for (int i = 0; i < 4; ++i) {
      const SubsetMask s = random_subset(c.h.universe(), rng);
      const Capacity hc = contract(c.h, s);
      t.record(mod, "contract-preserves-monotone", has(hc, Axiom::Monotone),
               [&] { return json{{"corpus", describe(c)}, {"s", io::to_json(s)}}; });
      if (ssa)
        t.record(mod, "contract-preserves-strong-subadd", has(hc, Axiom::StronglySubadditive),
                 [&] { return json{{"corpus", describe(c)}, {"s", io::to_json(s)}}; });
    }
  }
}

inline void integral_properties(Tally& t, const std::vector<CorpusEntry>& corpus, const SuiteConfig& cfg) {
  const std::string mod = "integral";
  for (const auto& c : corpus) {
    const GroundSet u = c.h.universe();
    const bool mono = has(c.h, Axiom::Monotone);
    const bool ssa = mono && has(c.h, Axiom::StronglySubadditive);
    Rng rng(mix(c.seed ^ 0x1e));
    for (int i = 0; i < cfg.functions; ++i) {
      const StepFunction f = random_function(u, rng, 12, 4);
      const StepFunction g = random_function(u, rng, 12, 4);
      const Rational s = rng.rational(12, 4);
      t.record(mod, "positive-homogeneity",
               choquet_value(scale(f, s), c.h) == mul(ExtReal(s), choquet_value(f, c.h)),
               [&] { return json{{"corpus", describe(c)}, {"f", io::to_json(f)}, {"c", to_string(s)}}; });
      if (mono) {
        const StepFunction fg = add(f, abs(sub(g, f)));  // >= f
        t.record(mod, "monotonicity", choquet_value(f, c.h) <= choquet_value(fg, c.h),
                 [&] { return json{{"corpus", describe(c)}, {"f", io::to_json(f)}, {"g", io::to_json(fg)}}; });
      }
      if (c.h.is_finite()) {
        const Rational step = pow2(-8);
        const Rational r = riemann_midpoint(f, c.h, step);
        const Rational v = choquet_value(f, c.h).value();
        const Rational tol = max_finite_value(f) * step * c.h.at(u.full_bits()).value();
        t.record(mod, "layer-cake-riemann", abs(Rational(v - r)) <= tol, [&] {
          return json{{"corpus", describe(c)}, {"f", io::to_json(f)}, {"choquet", to_string(v)}, {"riemann", to_string(r)}};
        });
      }
      if (ssa) {
        const ExtReal bound = choquet_value(f, c.h) + choquet_value(g, c.h);
        for (long kk = 1; kk <= 4; ++kk) {
          const ExtReal lhs = choquet_value(add(floor_scale(f, kk), floor_scale(g, kk)), c.h);
          t.record(mod, "floor-scaling-chain", lhs <= bound, [&] {
            return json{{"corpus", describe(c)}, {"f", io::to_json(f)}, {"g", io::to_json(g)}, {"k", kk}};
          });
          const ExtReal shifted = choquet_value(shifted_positive_part(add(f, g), Rational(2, kk)), c.h);
          t.record(mod, "floor-scaling-shifted-sum", shifted <= bound, [&] {
            return json{{"corpus", describe(c)}, {"f", io::to_json(f)}, {"g", io::to_json(g)}, {"k", kk}};
          });
        }
        const StepFunction fk = floor_scale(f, 2), gk = floor_scale(g, 2);
        // Compared in the extended reals: inf <= inf holds although the gap is undefined.
        const bool sub = choquet_value(add(fk, gk), c.h) <= choquet_value(fk, c.h) + choquet_value(gk, c.h);
        t.record(mod, "discrete-sublinearity", sub, [&] {
          return json{{"corpus", describe(c)}, {"f", io::to_json(fk)}, {"g", io::to_json(gk)}};
        });
      }
    }
    if (mono && u.size() <= cfg.sublinearity_max_n) {
      const SublinearityReport r = verify_sublinearity_equivalence(c.h, cfg.m, cfg.k, cfg.budget, cfg.jobs);
      t.record(mod, "sublinearity-equivalence", r.consistent,
               [&] { return json{{"corpus", describe(c)}, {"report", io::to_json(r)}}; });
    }
  }
}

inline void nesting_properties(Tally& t, const std::vector<CorpusEntry>& corpus, const SuiteConfig& cfg) {
  const std::string mod = "nesting";
  const int un = std::min(cfg.n, 4);
  const GroundSet u(un);
  const std::size_t max_family = static_cast<std::size_t>(std::min(cfg.n, 4));
  std::vector<Capacity> ssa;
  for (const auto& c : corpus)
    if (c.h.universe() == u && c.h.is_finite() && has(c.h, Axiom::Monotone) && has(c.h, Axiom::StronglySubadditive))
      ssa.push_back(c.h);
  std::vector<SubsetMask> family;
  for (std::size_t size = 1; size <= max_family; ++size) {
    const std::uint64_t total = std::uint64_t{1} << (un * size);
    for (std::uint64_t code = 0; code < total; ++code) {
      family.clear();
      for (std::size_t i = 0; i < size; ++i)
        family.emplace_back(u, static_cast<Mask>((code >> (un * i)) & u.full_bits()));
      const auto counts = indicator_counts(family);
      const auto d = lemma_step(family);
      const NestedFamily a = nest(family);
      auto witness = [&] { return io::sets_json(family); };
      t.record(mod, "indicator-conservation", indicator_counts(d) == counts && indicator_counts(a.sets()) == counts,
               witness);
      bool contained = true;
      for (const auto& s : d) contained = contained && s.is_subset_of(d.back());
      bool nested = true;
      for (std::size_t i = 1; i < a.size(); ++i) nested = nested && a[i - 1].is_subset_of(a[i]);
      t.record(mod, "nestedness", contained && nested, witness);
      bool consistent = true;
      StepFunction sum = StepFunction::zero(u);
      for (const auto& s : family) sum = add(sum, indicator(s));
      for (std::size_t i = 1; i <= size; ++i)
        consistent = consistent && a[i - 1] == superlevel(sum, Rational(static_cast<long>(size - i + 1)), false);
      t.record(mod, "count-consistency", consistent, witness);
      for (const auto& h : ssa) {
        const CapacitySumAudit audit = capacity_sum_audit(family, h);
        t.record(mod, "capacity-sum-monotonicity", audit.holds,
                 [&] { return json{{"family", io::sets_json(family)}, {"capacity", io::to_json(h)}}; });
      }
    }
  }
  t.touch(mod, "capacity-sum-monotonicity");
}

inline void duality_properties(Tally& t, const std::vector<CorpusEntry>& corpus, const SuiteConfig& cfg) {
  const std::string mod = "duality";
  for (const auto& c : corpus) {
    const GroundSet u = c.h.universe();
    if (!has(c.h, Axiom::Monotone) || !is_zero(c.h.at(0))) continue;
    const bool fsa = has(c.h, Axiom::FiniteSubadditive);
    const bool ssa = c.h.is_finite() && has(c.h, Axiom::StronglySubadditive);
    Rng rng(mix(c.seed ^ 0xdd));
    for (int i = 0; i < cfg.functions; ++i) {
      const StepFunction f = random_function(u, rng, 12, 4);
      if (fsa) {
        const DualityReport r = dual_value(f, c.h, DualMethod::ExactLP);
        t.record(mod, "weak-duality", r.dual_value <= r.choquet_value,
                 [&] { return json{{"corpus", describe(c)}, {"f", io::to_json(f)}, {"report", io::to_json(r)}}; });
      }
      if (ssa) {
        const DualityReport r = dual_value(f, c.h, DualMethod::Both);
        const bool ok = r.gap == Gap{Gap::Kind::Finite, Rational(0)} && r.greedy_value &&
                        ExtReal(*r.greedy_value) == r.choquet_value;
        t.record(mod, "strong-duality", ok,
                 [&] { return json{{"corpus", describe(c)}, {"f", io::to_json(f)}, {"report", io::to_json(r)}}; });
      }
      if (c.kind == CapacityKind::Additive) {
        const DualityReport r = dual_value(f, c.h, DualMethod::ExactLP);
        Rational expected(0);
        for (int x = 0; x < u.size(); ++x) expected += f[x].value() * c.h.at(Mask{1} << x).value();
        t.record(mod, "lp-additive-optimum", r.dual_value == ExtReal(expected),
                 [&] { return json{{"corpus", describe(c)}, {"f", io::to_json(f)}}; });
      }
      if (c.h.is_finite() || fsa) {
        const DualityReport r = dual_value(f, c.h, DualMethod::ExactLP);
        const bool attained = r.dual_value.is_infinite() ||
                              (is_dominated(r.optimal_measure, c.h) && ExtReal(r.optimal_measure.integral(f)) == r.dual_value);
        t.record(mod, "lp-solution-audit", attained,
                 [&] { return json{{"corpus", describe(c)}, {"f", io::to_json(f)}}; });
      }
      // A pointwise-convergent harness sequence f_n = f + 2^-n χ_E and a
      // dominated μ: Σ f μ <= min over the tail of Σ f_n μ plus η μ(X).
      const AdditiveMeasure mu = random_dominated_measure(c.h, rng);
      const SubsetMask e = random_subset(u, rng);
      const Rational eta(1, 8);
      Rational tail_min;
      bool first = true;
      for (long n = 3; n < 8; ++n) {
        const Rational v = mu.integral(add(f, scale(indicator(e), pow2(-n))));
        if (first || v < tail_min) tail_min = v;
        first = false;
      }
      t.record(mod, "fatou-via-domination", mu.integral(f) <= tail_min + eta * mu(SubsetMask::full(u)),
               [&] { return json{{"corpus", describe(c)}, {"f", io::to_json(f)}, {"mu", io::to_json(mu)}}; });
    }
  }
  for (auto name : {"weak-duality", "strong-duality", "lp-additive-optimum", "lp-solution-audit", "fatou-via-domination"})
    t.touch(mod, name);
}

inline void hausdorff_properties(Tally& t, const SuiteConfig& cfg) {
  const std::string mod = "hausdorff";
  const DyadicDomain dom(cfg.hausdorff_dim, cfg.hausdorff_depth);
  const auto cells = static_cast<Mask>(dom.cell_count());
  Rng rng(mix(cfg.seed ^ 0x4a));
  for (const auto& beta : cfg.betas) {
    std::vector<DyadicPowerSum> value(std::size_t{1} << cells);
    for (Mask m = 0; m < (Mask{1} << cells); ++m) value[m] = content(DyadicCellSet::from_mask(dom, m), beta).value;
    auto tag = [&](Mask m) { return json{{"beta", to_string(beta)}, {"cells_mask", m}}; };
    for (Mask m = 0; m < (Mask{1} << cells); ++m) {
      for (Mask x = 0; x < cells; ++x)
        if (!((m >> x) & 1U))
          t.record(mod, "monotone-in-E", value[m] <= value[m | (Mask{1} << x)], [&] { return tag(m); });
      if (dom.depth() <= 3 && dom.dimension() == 1)
        t.record(mod, "dp-optimality", value[m] == brute_force_content(DyadicCellSet::from_mask(dom, m), beta),
                 [&] { return tag(m); });
      const CoverSolution sol = content(DyadicCellSet::from_mask(dom, m), beta);
      t.record(mod, "certificate", cover_certificate_check(DyadicCellSet::from_mask(dom, m), beta, sol).valid(),
               [&] { return tag(m); });
    }
    for (std::size_t i = 0; i < dom.cell_count(); ++i)
      t.record(mod, "single-cell", value[Mask{1} << i] == DyadicPowerSum::power(dom.depth(), beta),
               [&] { return tag(Mask{1} << i); });
    if (dom.depth() >= 1) {
      // A set inside child c of the unit cube is the rescaled copy of a set
      // in the tree one level shallower.
      const DyadicDomain up(dom.dimension(), dom.depth() - 1);
      const std::size_t width = up.cell_count();
      for (int trial = 0; trial < 16; ++trial) {
        const auto child = static_cast<std::size_t>(rng.uniform(0, (1L << dom.dimension()) - 1));
        DyadicCellSet small(up), placed(dom);
        for (std::size_t i = 0; i < width; ++i)
          if (rng.chance(1, 2)) {
            small.insert(i);
            placed.insert(child * width + i);
          }
        const DyadicPowerSum lhs = content(placed, beta).value;
        const DyadicPowerSum rhs = content(small, beta).value.times_power(1, beta);
        t.record(mod, "scaling-law", lhs == rhs, [&] { return json{{"beta", to_string(beta)}, {"child", child}}; });
      }
    }
  }
  for (auto [d, l] : {std::pair{cfg.hausdorff_dim, cfg.hausdorff_depth}, std::pair{2, 1}}) {
    const DyadicDomain ed(d, l);
    if (ed.cell_count() > 16) continue;
    for (const auto& beta : cfg.betas) {
      const ContentCapacity h = export_capacity(ed, beta);
      for (Axiom a : {Axiom::Monotone, Axiom::FiniteSubadditive, Axiom::StronglySubadditive})
        t.record(mod, "exported-" + std::string(axiom_name(a)), check_axiom(h, a).holds,
                 [&] { return json{{"dim", d}, {"depth", l}, {"beta", to_string(beta)}}; });
    }
  }
}

/// f plus perturbations of size 2^-n on random sets, ending exactly at f.
inline FunctionSequence settling_sequence(GroundSet u, Rng& rng, std::size_t length, bool nonnegative) {
  const StepFunction f = nonnegative ? random_function(u, rng, 8, 4) : random_signed_function(u, rng, 8, 4);
  std::vector<StepFunction> terms;
  for (std::size_t n = 0; n + 1 < length; ++n)
    terms.push_back(add(f, scale(indicator(random_subset(u, rng)), pow2(-static_cast<long>(n)))));
  terms.push_back(f);
  return {std::move(terms), f};
}

inline void convergence_properties(Tally& t, const std::vector<CorpusEntry>& corpus, const SuiteConfig& cfg) {
  const std::string mod = "convergence";
  for (const auto& c : corpus) {
    const GroundSet u = c.h.universe();
    if (!has(c.h, Axiom::Monotone)) continue;
    const bool fsa = has(c.h, Axiom::FiniteSubadditive);
    const bool csa = fsa && has(c.h, Axiom::CountableSubadditive);
    Rng rng(mix(c.seed ^ 0xc0));
    for (int i = 0; i < cfg.functions; ++i) {
      const FunctionSequence seq = settling_sequence(u, rng, 6, false);
      const Rational eta = make_rational(rng.uniform(1, 8), 8);
      const std::size_t tail = static_cast<std::size_t>(rng.uniform(0, 4));
      const ConvergenceAudit qa = qu_audit(seq, c.h, eta, tail);
      bool minimal = true;
      for (int x : qa.minimal_bad_set->points()) {
        bool deviates = false;
        for (std::size_t n = tail; n < seq.size(); ++n) deviates = deviates || deviation(seq[n], seq.limit())[x] > ExtReal(eta);
        minimal = minimal && deviates;
      }
      for (std::size_t n = tail; n < seq.size(); ++n)
        minimal = minimal && superlevel(deviation(seq[n], seq.limit()), eta, true).is_subset_of(*qa.minimal_bad_set);
      t.record(mod, "qu-minimal-bad-set", minimal, [&] { return io::to_json(seq); });

      const long n = rng.uniform(0, 5);
      const NamedCheck ch = chebyshev_audit(seq[0], seq.limit(), c.h, n);
      t.record(mod, "chebyshev", ch.holds, [&] { return json{{"corpus", describe(c)}, {"n", n}, {"check", io::to_json(ch)}}; });

      if (fsa) {
        const FunctionSequence pos = settling_sequence(u, rng, 5, true);
        const ConvergenceAudit fa = fatou_harness(pos, c.h, {Rational(1, 8), max_finite_value(pos.limit()) + 1, 0});
        t.record(mod, "fatou-no-violation", fa.all_hold(),
                 [&] { return json{{"corpus", describe(c)}, {"sequence", io::to_json(pos)}, {"audit", io::to_json(fa)}}; });
        StepFunction dom = abs(seq.limit());
        for (const auto& term : seq.terms())
          for (int x = 0; x < u.size(); ++x)
            if (abs(term)[x] > dom[x]) dom = add(dom, scale(indicator(SubsetMask::of(u, {x})), abs(term)[x].value() - dom[x].value()));
        if (choquet_value(dom, c.h).is_finite()) {
          const ConvergenceAudit da = dct_harness(seq, dom, c.h);
          t.record(mod, "dct-no-violation", da.all_hold(),
                   [&] { return json{{"corpus", describe(c)}, {"sequence", io::to_json(seq)}, {"audit", io::to_json(da)}}; });
        }
      }
      if (csa) {
        // ∫|f_n - f| dH <= 4^-n: perturb by 4^-n / max(1, H(E)) on E.
        const StepFunction f = random_signed_function(u, rng, 8, 4);
        if (l1_norm(f, c.h).is_finite()) {
          std::vector<StepFunction> terms;
          for (long k = 0; k < 5; ++k) {
            const SubsetMask e = random_subset(u, rng);
            if (c.h(e).is_infinite()) {
              terms.push_back(f);
              continue;
            }
            const Rational size = std::max(c.h(e).value(), Rational(1));
            terms.push_back(add(f, scale(indicator(e), pow2(-2 * k) / size)));
          }
          const FunctionSequence cs(std::move(terms), f);
          const ConvergenceAudit ca = converse_dct_audit(cs, c.h);
          t.record(mod, "converse-bounds", ca.all_hold(),
                   [&] { return json{{"corpus", describe(c)}, {"sequence", io::to_json(cs)}, {"audit", io::to_json(ca)}}; });
        }
      }
    }
  }
  for (auto name : {"fatou-no-violation", "dct-no-violation", "converse-bounds"}) t.touch(mod, name);
}

inline void cli_properties(Tally& t, const std::vector<CorpusEntry>& corpus, const SuiteConfig& cfg) {
  const std::string mod = "cli";
  for (const auto& c : corpus) {
    const json cj = io::to_json(c.h);
    t.record(mod, "round-trip-capacity", io::load_capacity(json::parse(cj.dump())).capacity == c.h,
             [&] { return describe(c); });
    Rng rng(mix(c.seed ^ 0x77));
    const FunctionSequence seq = settling_sequence(c.h.universe(), rng, 3, false);
    const json sj = io::to_json(seq);
    const FunctionSequence back = io::load_sequence(json::parse(sj.dump()));
    bool same = back.size() == seq.size() && back.limit() == seq.limit();
    for (std::size_t n = 0; same && n < seq.size(); ++n) same = back[n] == seq[n];
    t.record(mod, "round-trip-sequence", same, [&] { return sj; });
  }
  // Parallelism independence of the exhaustive enumerator.
  for (const auto& c : corpus) {
    if (c.h.universe().size() != std::min(cfg.n, cfg.sublinearity_max_n) || !has(c.h, Axiom::Monotone)) continue;
    const unsigned jobs = std::max(2u, cfg.jobs);
    const SublinearityReport a = verify_sublinearity_equivalence(c.h, cfg.m, cfg.k, cfg.budget, 1);
    const SublinearityReport b = verify_sublinearity_equivalence(c.h, cfg.m, cfg.k, cfg.budget, jobs);
    t.record(mod, "parallel-determinism",
             a.max_gap == b.max_gap && a.argmax_f == b.argmax_f && a.argmax_g == b.argmax_g, [&] { return describe(c); });
  }
  t.touch(mod, "parallel-determinism");
}

}  // namespace detail

struct SuiteReport {
  json document;
  bool ok;
};

inline SuiteReport run(const SuiteConfig& cfg) {
  validate(cfg);
  const auto corpus = build_corpus(cfg.seed, cfg.n, cfg.per_kind);
  Tally t;
  detail::domain_properties(t, corpus, cfg);
  detail::capacity_properties(t, corpus);
  detail::integral_properties(t, corpus, cfg);
  detail::nesting_properties(t, corpus, cfg);
  detail::duality_properties(t, corpus, cfg);
  detail::hausdorff_properties(t, cfg);
  detail::convergence_properties(t, corpus, cfg);
  detail::cli_properties(t, corpus, cfg);

  json props = json::array();
  std::uint64_t checked = 0, failed = 0;
  for (const auto& p : t.results()) {
    json item = {{"module", p.module}, {"property", p.name}, {"checked", p.checked}, {"failed", p.failed}};
    if (p.witness) item["witness"] = *p.witness;
    props.push_back(item);
    checked += p.checked;
    failed += p.failed;
  }
  json doc = {{"seed", cfg.seed},
              {"n", cfg.n},
              {"corpus_size", corpus.size()},
              {"jobs", cfg.jobs},
              {"properties", props},
              {"checked", checked},
              {"failed", failed},
              {"ok", t.ok()}};
  return {doc, t.ok()};
}

}  // namespace choquet::suite

#endif  // CHOQUET_TOOLS_SUITE_HPP
