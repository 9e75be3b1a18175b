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

// Seeded generators for capacity corpora and random step functions.
// Every draw goes through Rng so that output is identical across standard
// library implementations for a fixed seed.

#ifndef CHOQUET_GENERATORS_HPP
#define CHOQUET_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "choquet/capacity.hpp"

namespace choquet {

/// mt19937_64 with portable bounded draws (no std distributions, whose
/// output is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do draw = engine_();
    while (draw >= limit);
    return lo + static_cast<long>(draw % span);
  }

  bool chance(long numerator, long denominator) { return uniform(0, denominator - 1) < numerator; }

  /// Uniform over {0, 1/den, ..., max_num/den}.
  Rational rational(long max_num, long den) { return make_rational(uniform(0, max_num), static_cast<unsigned long>(den)); }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

enum class CapacityKind {
  RandomMonotone,
  RandomSubmodularMonotone,
  Additive,
  Threshold,          // 0 if |A| <= m, 1 otherwise
  ThresholdInfinite,  // 0 on ∅, 1 if |A| <= m, inf otherwise
  RandomMonotoneInfinite,
  RandomSubmodularInfinite,
};

inline std::string_view kind_name(CapacityKind k) {
  switch (k) {
    case CapacityKind::RandomMonotone: return "random-monotone";
    case CapacityKind::RandomSubmodularMonotone: return "random-submodular";
    case CapacityKind::Additive: return "additive";
    case CapacityKind::Threshold: return "threshold";
    case CapacityKind::ThresholdInfinite: return "threshold-infinite";
    case CapacityKind::RandomMonotoneInfinite: return "random-monotone-infinite";
    case CapacityKind::RandomSubmodularInfinite: return "random-submodular-infinite";
  }
  return "unknown";
}

inline CapacityKind parse_kind(std::string_view name) {
  for (auto k : {CapacityKind::RandomMonotone, CapacityKind::RandomSubmodularMonotone,
                 CapacityKind::Additive, CapacityKind::Threshold, CapacityKind::ThresholdInfinite,
                 CapacityKind::RandomMonotoneInfinite, CapacityKind::RandomSubmodularInfinite})
    if (kind_name(k) == name) return k;
  throw ValidationError("unknown capacity kind '" + std::string(name) + "'");
}

struct GeneratorOptions {
  int threshold = 0;       // m for the threshold kinds
  long max_numerator = 12;  // finite values are drawn from {0, 1/den, ..., max/den}
  long denominator = 4;
  int hidden_items = 0;     // coverage universe size; 0 means 2n
};

namespace detail {

inline Capacity monotone_envelope(GroundSet u, std::vector<ExtReal> raw) {
  raw[0] = Rational(0);
  for (std::size_t a = 1; a < raw.size(); ++a)
    for (int x = 0; x < u.size(); ++x)
      if ((a >> x) & 1U) raw[a] = max(raw[a], raw[a & ~(std::size_t{1} << x)]);
  return Capacity(u, std::move(raw));
}

inline Capacity random_coverage(GroundSet u, Rng& rng, const GeneratorOptions& opt) {
  const int items = opt.hidden_items > 0 ? opt.hidden_items : 2 * u.size();
  std::vector<Rational> weight;
  for (int i = 0; i < items; ++i) weight.push_back(make_rational(rng.uniform(1, opt.max_numerator), static_cast<unsigned long>(opt.denominator)));
  std::vector<std::uint64_t> covers(static_cast<std::size_t>(u.size()));
  for (auto& c : covers)
    for (int i = 0; i < items; ++i)
      if (rng.chance(1, 3)) c |= std::uint64_t{1} << i;
  return Capacity::from_function(u, [&](const SubsetMask& a) {
    std::uint64_t covered = 0;
    for (int x : a.points()) covered |= covers[static_cast<std::size_t>(x)];
    Rational s(0);
    for (int i = 0; i < items; ++i)
      if ((covered >> i) & 1U) s += weight[static_cast<std::size_t>(i)];
    return ExtReal(s);
  });
}

}  // namespace detail

/// Draws one capacity. All kinds give H(∅) = 0 and monotone tables; the
/// submodular kinds (coverage functions, optionally with infinite points)
/// are strongly subadditive by construction.
inline Capacity generate_capacity(CapacityKind kind, GroundSet u, std::uint64_t seed,
                                  const GeneratorOptions& opt = {}) {
  Rng rng(seed);
  switch (kind) {
    case CapacityKind::RandomMonotone: {
      std::vector<ExtReal> raw;
      for (std::size_t a = 0; a < u.subset_count(); ++a) raw.emplace_back(rng.rational(opt.max_numerator, opt.denominator));
      return detail::monotone_envelope(u, std::move(raw));
    }
    case CapacityKind::RandomSubmodularMonotone:
      return detail::random_coverage(u, rng, opt);
    case CapacityKind::Additive: {
      std::vector<Rational> masses;
      for (int x = 0; x < u.size(); ++x) masses.push_back(rng.rational(opt.max_numerator, opt.denominator));
      return additive_capacity(u, masses);
    }
    case CapacityKind::Threshold:
      return Capacity::from_function(u, [&](const SubsetMask& a) {
        return ExtReal(Rational(a.count() <= opt.threshold ? 0 : 1));
      });
    case CapacityKind::ThresholdInfinite:
      return Capacity::from_function(u, [&](const SubsetMask& a) {
        if (a.is_empty()) return ExtReal(Rational(0));
        return a.count() <= opt.threshold ? ExtReal(Rational(1)) : ExtReal::infinity();
      });
    case CapacityKind::RandomMonotoneInfinite: {
      // Random monotone table, then every superset of a few random
      // nonempty seed sets is sent to +inf.
      std::vector<ExtReal> raw;
      for (std::size_t a = 0; a < u.subset_count(); ++a) raw.emplace_back(rng.rational(opt.max_numerator, opt.denominator));
      const Capacity base = detail::monotone_envelope(u, std::move(raw));
      std::vector<Mask> seeds;
      const long count = rng.uniform(1, 2);
      for (long i = 0; i < count; ++i) seeds.push_back(static_cast<Mask>(rng.uniform(1, static_cast<long>(u.full_bits()))));
      return Capacity::from_function(u, [&](const SubsetMask& a) {
        for (Mask s : seeds)
          if ((a.bits() & s) == s) return ExtReal::infinity();
        return base(a);
      });
    }
    case CapacityKind::RandomSubmodularInfinite: {
      // H(A) = inf whenever A meets a set P of "infinite points"; this
      // keeps strong subadditivity of the underlying coverage function.
      const Capacity base = detail::random_coverage(u, rng, opt);
      Mask infinite_points = Mask{1} << rng.uniform(0, u.size() - 1);
      if (u.size() > 2 && rng.chance(1, 3)) infinite_points |= Mask{1} << rng.uniform(0, u.size() - 1);
      return Capacity::from_function(u, [&](const SubsetMask& a) {
        return (a.bits() & infinite_points) ? ExtReal::infinity() : base(a);
      });
    }
  }
  throw ValidationError("unhandled capacity kind");
}

/// A nonnegative step function with values in {0, 1/den, ..., max/den}.
inline StepFunction random_function(GroundSet u, Rng& rng, long max_numerator, long den) {
  std::vector<ExtReal> values;
  for (int x = 0; x < u.size(); ++x) values.emplace_back(rng.rational(max_numerator, den));
  return {u, std::move(values)};
}

/// A finite signed step function with values in {-max/den, ..., max/den}.
inline StepFunction random_signed_function(GroundSet u, Rng& rng, long max_numerator, long den) {
  std::vector<ExtReal> values;
  for (int x = 0; x < u.size(); ++x)
    values.emplace_back(make_rational(rng.uniform(-max_numerator, max_numerator), static_cast<unsigned long>(den)));
  return {u, std::move(values)};
}

inline SubsetMask random_subset(GroundSet u, Rng& rng) {
  return {u, static_cast<Mask>(rng.uniform(0, static_cast<long>(u.full_bits())))};
}

}  // namespace choquet

#endif  // CHOQUET_GENERATORS_HPP
