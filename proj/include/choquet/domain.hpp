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

// Finite ground sets, subsets as bit masks, and step functions with the
// level-set calculus the rest of the library is built on.

#ifndef CHOQUET_DOMAIN_HPP
#define CHOQUET_DOMAIN_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "choquet/extended.hpp"

namespace choquet {

using Mask = std::uint32_t;

/// The points {0, ..., n-1}. Capacities over a ground set are dense 2^n
/// tables, which is what bounds n.
class GroundSet {
 public:
  static constexpr int kMaxSize = 24;

  explicit GroundSet(int n) : n_(n) {
    if (n < 1 || n > kMaxSize)
      throw ValidationError("ground set size " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxSize) + "]");
  }

  int size() const { return n_; }
  std::size_t subset_count() const { return std::size_t{1} << n_; }
  Mask full_bits() const { return static_cast<Mask>(subset_count() - 1); }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int n_;
};

inline void require_same(const GroundSet& a, const GroundSet& b, const char* what) {
  if (a != b)
    throw ValidationError(std::string(what) + ": universe mismatch (n=" + std::to_string(a.size()) +
                          " vs n=" + std::to_string(b.size()) + ")");
}

/// A subset of a ground set.
class SubsetMask {
 public:
  SubsetMask(GroundSet universe, Mask bits) : universe_(universe), bits_(bits) {
    if ((bits & ~universe.full_bits()) != 0)
      throw ValidationError("subset mask " + std::to_string(bits) + " has bits outside n=" +
                            std::to_string(universe.size()));
  }

  static SubsetMask empty(GroundSet universe) { return {universe, 0}; }
  static SubsetMask full(GroundSet universe) { return {universe, universe.full_bits()}; }
  static SubsetMask of(GroundSet universe, std::initializer_list<int> points) {
    return of(universe, std::span<const int>(points.begin(), points.size()));
  }
  static SubsetMask of(GroundSet universe, std::span<const int> points) {
    Mask bits = 0;
    for (int p : points) {
      if (p < 0 || p >= universe.size())
        throw ValidationError("point " + std::to_string(p) + " outside ground set of size " +
                              std::to_string(universe.size()));
      bits |= Mask{1} << p;
    }
    return {universe, bits};
  }

  const GroundSet& universe() const { return universe_; }
  Mask bits() const { return bits_; }
  bool contains(int x) const { return (bits_ >> x) & 1U; }
  bool is_empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  bool is_subset_of(const SubsetMask& other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> points() const {
    std::vector<int> out;
    for (int x = 0; x < universe_.size(); ++x)
      if (contains(x)) out.push_back(x);
    return out;
  }

  friend SubsetMask operator&(const SubsetMask& a, const SubsetMask& b) {
    require_same(a.universe_, b.universe_, "intersection");
    return {a.universe_, a.bits_ & b.bits_};
  }
  friend SubsetMask operator|(const SubsetMask& a, const SubsetMask& b) {
    require_same(a.universe_, b.universe_, "union");
    return {a.universe_, a.bits_ | b.bits_};
  }
  SubsetMask complement() const { return {universe_, universe_.full_bits() & ~bits_}; }
  SubsetMask minus(const SubsetMask& other) const { return *this & other.complement(); }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

 private:
  GroundSet universe_;
  Mask bits_;
};

inline std::string to_string(const SubsetMask& s) {
  std::string out = "{";
  bool first = true;
  for (int x : s.points()) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

/// f: X -> [0, inf] or, in the signed variant, X -> R.
///
/// Entries are exact rationals or +inf. Negative entries make the function
/// signed; signed functions must be finite.
class StepFunction {
 public:
  StepFunction(GroundSet universe, std::vector<ExtReal> values)
      : universe_(universe), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(universe.size()))
      throw ValidationError("step function has " + std::to_string(values_.size()) +
                            " values for a ground set of size " + std::to_string(universe.size()));
    bool negative = false, infinite = false;
    for (const auto& v : values_) {
      negative |= sign(v) < 0;
      infinite |= v.is_infinite();
    }
    if (negative && infinite)
      throw ValidationError("signed step functions must take finite values");
  }

  static StepFunction zero(GroundSet universe) {
    return {universe, std::vector<ExtReal>(static_cast<std::size_t>(universe.size()), Rational(0))};
  }
  static StepFunction constant(GroundSet universe, const ExtReal& c) {
    return {universe, std::vector<ExtReal>(static_cast<std::size_t>(universe.size()), c)};
  }
  static StepFunction of(GroundSet universe, std::initializer_list<Rational> values) {
    return {universe, std::vector<ExtReal>(values.begin(), values.end())};
  }

  const GroundSet& universe() const { return universe_; }
  int size() const { return universe_.size(); }
  const ExtReal& operator[](int x) const { return values_[static_cast<std::size_t>(x)]; }
  std::span<const ExtReal> values() const { return values_; }

  bool is_nonnegative() const {
    return std::none_of(values_.begin(), values_.end(), [](const ExtReal& v) { return sign(v) < 0; });
  }
  bool is_finite() const {
    return std::all_of(values_.begin(), values_.end(), [](const ExtReal& v) { return v.is_finite(); });
  }

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.universe_ == b.universe_ && a.values_ == b.values_;
  }

 private:
  GroundSet universe_;
  std::vector<ExtReal> values_;
};

inline std::string to_string(const StepFunction& f) {
  std::string out = "(";
  for (int x = 0; x < f.size(); ++x) {
    if (x) out += ",";
    out += to_string(f[x]);
  }
  return out + ")";
}

/// {x : f(x) > t} when strict, {x : f(x) >= t} otherwise.
inline SubsetMask superlevel(const StepFunction& f, const Rational& t, bool strict) {
  if (sgn(t) < 0) throw ValidationError("superlevel threshold must be nonnegative");
  const ExtReal level(t);
  Mask bits = 0;
  for (int x = 0; x < f.size(); ++x)
    if (strict ? f[x] > level : f[x] >= level) bits |= Mask{1} << x;
  return {f.universe(), bits};
}

/// Clamps every value into [-k, k]; nonnegative functions land in [0, k].
inline StepFunction truncate(const StepFunction& f, const Rational& k) {
  if (sgn(k) <= 0) throw ValidationError("truncation height must be positive");
  std::vector<ExtReal> out;
  out.reserve(static_cast<std::size_t>(f.size()));
  for (const auto& v : f.values()) {
    if (v > ExtReal(k))
      out.emplace_back(k);
    else if (v.is_finite() && v.value() < -k)
      out.emplace_back(Rational(-k));
    else
      out.push_back(v);
  }
  return {f.universe(), std::move(out)};
}

/// floor(k f) / k, computed in exact arithmetic.
inline StepFunction floor_scale(const StepFunction& f, long k) {
  if (k < 1) throw ValidationError("floor_scale denominator must be >= 1");
  std::vector<ExtReal> out;
  out.reserve(static_cast<std::size_t>(f.size()));
  for (int x = 0; x < f.size(); ++x) {
    const ExtReal& v = f[x];
    if (v.is_infinite())
      throw ValidationError("floor_scale is undefined at +inf (point " + std::to_string(x) + ")");
    if (sgn(v.value()) < 0) throw ValidationError("floor_scale requires a nonnegative function");
    Rational scaled = v.value() * k;
    Rational q(floor(scaled), Integer(k));
    q.canonicalize();
    out.emplace_back(std::move(q));
  }
  return {f.universe(), std::move(out)};
}

inline StepFunction indicator(const SubsetMask& a) {
  std::vector<ExtReal> out;
  for (int x = 0; x < a.universe().size(); ++x) out.emplace_back(Rational(a.contains(x) ? 1 : 0));
  return {a.universe(), std::move(out)};
}

inline StepFunction add(const StepFunction& f, const StepFunction& g) {
  require_same(f.universe(), g.universe(), "add");
  std::vector<ExtReal> out;
  for (int x = 0; x < f.size(); ++x) out.push_back(f[x] + g[x]);
  return {f.universe(), std::move(out)};
}

inline StepFunction sub(const StepFunction& f, const StepFunction& g) {
  require_same(f.universe(), g.universe(), "sub");
  if (!f.is_finite() || !g.is_finite()) throw ValidationError("sub requires finite functions");
  std::vector<ExtReal> out;
  for (int x = 0; x < f.size(); ++x) out.emplace_back(Rational(f[x].value() - g[x].value()));
  return {f.universe(), std::move(out)};
}

inline StepFunction abs(const StepFunction& f) {
  std::vector<ExtReal> out;
  for (const auto& v : f.values())
    out.push_back(v.is_finite() && sgn(v.value()) < 0 ? ExtReal(Rational(-v.value())) : v);
  return {f.universe(), std::move(out)};
}

/// c * f for c >= 0, with 0 * inf = 0; for finite signed f any rational c.
inline StepFunction scale(const StepFunction& f, const Rational& c) {
  std::vector<ExtReal> out;
  for (const auto& v : f.values()) {
    if (v.is_infinite()) {
      if (sgn(c) < 0) throw ValidationError("cannot scale +inf by a negative factor");
      out.push_back(sgn(c) == 0 ? ExtReal(Rational(0)) : v);
    } else {
      out.emplace_back(Rational(v.value() * c));
    }
  }
  return {f.universe(), std::move(out)};
}

/// (f - c)^+ for a nonnegative f and c >= 0; +inf stays +inf.
inline StepFunction shifted_positive_part(const StepFunction& f, const Rational& c) {
  std::vector<ExtReal> out;
  for (const auto& v : f.values()) {
    if (v.is_infinite()) {
      out.push_back(v);
    } else {
      Rational d = v.value() - c;
      out.emplace_back(sgn(d) > 0 ? d : Rational(0));
    }
  }
  return {f.universe(), std::move(out)};
}

inline bool pointwise_le(const StepFunction& f, const StepFunction& g) {
  require_same(f.universe(), g.universe(), "pointwise comparison");
  for (int x = 0; x < f.size(); ++x)
    if (g[x] < f[x]) return false;
  return true;
}

/// Largest finite value of f (0 when f has none).
inline Rational max_finite_value(const StepFunction& f) {
  Rational best(0);
  for (const auto& v : f.values())
    if (v.is_finite() && v.value() > best) best = v.value();
  return best;
}

}  // namespace choquet

#endif  // CHOQUET_DOMAIN_HPP
