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

#ifndef CHOQUET_EXTENDED_HPP
#define CHOQUET_EXTENDED_HPP

#include <string>
#include <type_traits>
#include <utility>

#include "choquet/rational.hpp"

namespace choquet {

/// A value of an ordered scalar type T, or +infinity.
///
/// Arithmetic follows the layer-cake conventions: inf + a = inf and
/// 0 * inf = 0. Subtraction is deliberately absent; callers that need a
/// difference handle the infinite cases explicitly.
template <class T>
class Extended {
 public:
  Extended() : value_() {}
  Extended(T value) : value_(std::move(value)) {}  // NOLINT: implicit by intent
  template <class U>
    requires std::is_integral_v<U>
  Extended(U value) : value_(static_cast<long>(value)) {}  // NOLINT

  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  const T& value() const {
    if (infinite_) throw ValidationError("finite value requested from +inf");
    return value_;
  }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Extended(T(a.value_ + b.value_));
  }
  Extended& operator+=(const Extended& other) { return *this = *this + other; }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator<=(const Extended& a, const Extended& b) { return !(b < a); }
  friend bool operator>=(const Extended& a, const Extended& b) { return !(a < b); }

 private:
  T value_;
  bool infinite_ = false;
};

using ExtReal = Extended<Rational>;

inline int sign(const ExtReal& x) { return x.is_infinite() ? 1 : sign(x.value()); }

inline bool is_zero(const ExtReal& x) { return x.is_finite() && sgn(x.value()) == 0; }

/// Product of two nonnegative extended reals with 0 * inf = 0.
inline ExtReal mul(const ExtReal& a, const ExtReal& b) {
  if (is_zero(a) || is_zero(b)) return Rational(0);
  if (a.is_infinite() || b.is_infinite()) return ExtReal::infinity();
  return Rational(a.value() * b.value());
}

inline const ExtReal& max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
inline const ExtReal& min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }

inline std::string to_string(const ExtReal& x) {
  return x.is_infinite() ? std::string("inf") : to_string(x.value());
}

inline ExtReal parse_extended(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "infinity") return ExtReal::infinity();
  return parse_rational(text);
}

}  // namespace choquet

#endif  // CHOQUET_EXTENDED_HPP
