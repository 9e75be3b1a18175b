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

#ifndef CHOQUET_RATIONAL_HPP
#define CHOQUET_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace choquet {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, universe mismatch, or a size guard tripping.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation declined to run because a hypothesis it relies on fails.
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// A post-condition that a theorem guarantees did not hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational make_rational(long num, unsigned long den = 1) {
  if (den == 0) throw ValidationError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// 2^e for any integer exponent, exactly.
inline Rational pow2(long e) {
  Rational q(1);
  if (e >= 0)
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return q;
}

inline Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// Parses "p/q", integers, and decimals with an optional exponent
/// ("1.25", "-3e-2") exactly; no binary floating point is involved.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ValidationError("empty number");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 ||
        den.set_str(s.substr(slash + 1), 10) != 0)
      throw ValidationError("malformed fraction '" + s + "'");
    if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) --scale;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ValidationError("malformed number '" + s + "'");
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E')
      throw ValidationError("malformed number '" + s + "'");
    try {
      std::size_t used = 0;
      scale += std::stol(s.substr(pos + 1), &used);
      if (used != s.size() - pos - 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw ValidationError("malformed exponent in '" + s + "'");
    }
  }
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational q = scale >= 0 ? Rational(mantissa * ten_pow) : Rational(mantissa, ten_pow);
  q.canonicalize();
  return q;
}

/// Canonical "p/q" rendering; integers render without a denominator.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Decimal rendering truncated toward zero after `digits` fractional digits.
inline std::string to_decimal(const Rational& q, int digits = 12) {
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(q) * ten_pow;
  Integer whole = floor(scaled);
  std::string body = whole.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
  }
  if (sgn(q) < 0 && body != "0") body.insert(0, "-");
  return body;
}

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace choquet

#endif  // CHOQUET_RATIONAL_HPP
