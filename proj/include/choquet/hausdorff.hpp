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

// Dyadic Hausdorff content of unions of finest-level cells in [0,1)^d,
// computed exactly by dynamic programming over the dyadic tree.
//
// Costs live in DyadicPowerSum: with β = p/q in lowest terms every cost is
// Σ_r a_r 2^{-r/q} with rational a_r and 0 <= r < q. These q numbers are
// linearly independent over Q (x^q - 2 is irreducible), so equality is
// decided exactly on the coefficients and only the sign of a nonzero value
// needs floating point, which uses outward-rounded MPFR intervals.

#ifndef CHOQUET_HAUSDORFF_HPP
#define CHOQUET_HAUSDORFF_HPP

#include <mpfr.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "choquet/capacity.hpp"

namespace choquet {

namespace detail {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace detail

class DyadicPowerSum {
 public:
  DyadicPowerSum() : coeffs_(1) {}
  DyadicPowerSum(long v) : coeffs_{Rational(v)} {}  // NOLINT: implicit by intent
  DyadicPowerSum(Rational v) : coeffs_{std::move(v)} {}  // NOLINT

  /// Σ_r coeffs[r] 2^{-r/q}.
  DyadicPowerSum(unsigned long q, std::vector<Rational> coeffs) : q_(q), coeffs_(std::move(coeffs)) {
    if (q_ == 0 || coeffs_.size() != q_) throw ValidationError("power sum needs q coefficients");
  }

  /// 2^{-kβ} for integer k and rational β > 0.
  static DyadicPowerSum power(long k, const Rational& beta) {
    if (sgn(beta) <= 0) throw ValidationError("exponent β must be positive");
    if (!beta.get_num().fits_slong_p() || !beta.get_den().fits_ulong_p())
      throw ValidationError("exponent β has an oversized numerator or denominator");
    const long p = beta.get_num().get_si();
    const unsigned long q = beta.get_den().get_ui();
    // kp = q s + r with 0 <= r < q
    const long e = k * p;
    const long ql = static_cast<long>(q);
    long s = e / ql, r = e % ql;
    if (r < 0) {
      r += ql;
      --s;
    }
    std::vector<Rational> coeffs(q);
    coeffs[static_cast<std::size_t>(r)] = pow2(-s);
    return {q, std::move(coeffs)};
  }

  unsigned long basis() const { return q_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_rational() const {
    for (std::size_t r = 1; r < coeffs_.size(); ++r)
      if (sgn(coeffs_[r]) != 0) return false;
    return true;
  }
  Rational rational_value() const {
    if (!is_rational()) throw ValidationError("power sum " + to_string() + " is irrational");
    return coeffs_[0];
  }

  friend DyadicPowerSum operator+(const DyadicPowerSum& a, const DyadicPowerSum& b) {
    const unsigned long q = std::lcm(a.q_, b.q_);
    DyadicPowerSum out = a.lifted(q);
    const DyadicPowerSum rhs = b.lifted(q);
    for (std::size_t r = 0; r < q; ++r) out.coeffs_[r] += rhs.coeffs_[r];
    return out;
  }
  DyadicPowerSum& operator+=(const DyadicPowerSum& other) { return *this = *this + other; }
  DyadicPowerSum operator-() const {
    DyadicPowerSum out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  friend DyadicPowerSum operator-(const DyadicPowerSum& a, const DyadicPowerSum& b) { return a + (-b); }

  friend DyadicPowerSum operator*(const DyadicPowerSum& a, const Rational& c) {
    DyadicPowerSum out = a;
    for (auto& x : out.coeffs_) x *= c;
    return out;
  }

  /// this · 2^{-kβ}.
  DyadicPowerSum times_power(long k, const Rational& beta) const {
    const DyadicPowerSum unit = power(k, beta);
    const unsigned long q = std::lcm(q_, unit.q_);
    const DyadicPowerSum a = lifted(q), u = unit.lifted(q);
    std::size_t shift = 0;
    for (std::size_t r = 0; r < q; ++r)
      if (sgn(u.coeffs_[r]) != 0) shift = r;
    const Rational& factor = u.coeffs_[shift];
    std::vector<Rational> out(q);
    for (std::size_t r = 0; r < q; ++r) {
      if (sgn(a.coeffs_[r]) == 0) continue;
      std::size_t t = r + shift;
      Rational c = a.coeffs_[r] * factor;
      if (t >= q) {
        t -= q;
        c /= 2;
      }
      out[t] += c;
    }
    return {q, std::move(out)};
  }

  /// Exact sign: zero iff every coefficient is zero; otherwise the interval
  /// enclosure is refined until it excludes zero.
  int sign() const {
    bool all_zero = true;
    for (const auto& c : coeffs_) all_zero = all_zero && sgn(c) == 0;
    if (all_zero) return 0;
    if (is_rational()) return sgn(coeffs_[0]);
    for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t{1} << 20); prec *= 4) {
      detail::Mpfr lo(prec), hi(prec);
      enclose(lo.get(), hi.get(), prec);
      if (mpfr_sgn(lo.get()) > 0) return 1;
      if (mpfr_sgn(hi.get()) < 0) return -1;
    }
    throw InvariantViolation("power sum sign did not resolve");
  }

  friend bool operator==(const DyadicPowerSum& a, const DyadicPowerSum& b) { return (a - b).sign() == 0; }
  friend bool operator<(const DyadicPowerSum& a, const DyadicPowerSum& b) { return (b - a).sign() > 0; }
  friend bool operator>(const DyadicPowerSum& a, const DyadicPowerSum& b) { return b < a; }
  friend bool operator<=(const DyadicPowerSum& a, const DyadicPowerSum& b) { return !(b < a); }
  friend bool operator>=(const DyadicPowerSum& a, const DyadicPowerSum& b) { return !(a < b); }

  /// Rounded to nearest at about `digits` significant decimal digits.
  std::string to_decimal(int digits = 30) const {
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
    detail::Mpfr lo(prec), hi(prec), mid(prec);
    enclose(lo.get(), hi.get(), prec);
    mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, mid.get());
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }
  double to_double() const { return std::stod(to_decimal(20)); }

  /// "a_0 + a_1*2^(-1/q) + ...", zero terms omitted; rational values print as
  /// plain rationals.
  std::string to_string() const {
    if (is_rational()) return choquet::to_string(coeffs_[0]);
    std::string s;
    for (std::size_t r = 0; r < q_; ++r) {
      if (sgn(coeffs_[r]) == 0) continue;
      if (!s.empty()) s += " + ";
      s += choquet::to_string(coeffs_[r]);
      if (r > 0) s += "*2^(-" + std::to_string(r) + "/" + std::to_string(q_) + ")";
    }
    return s;
  }

  static DyadicPowerSum parse(std::string_view text) {
    DyadicPowerSum total;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t plus = text.find(" + ", pos);
      const std::string_view term = text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
      const std::size_t star = term.find("*2^(-");
      if (star == std::string_view::npos) {
        total += DyadicPowerSum(parse_rational(term));
      } else {
        const Rational c = parse_rational(term.substr(0, star));
        std::string_view exp = term.substr(star + 5);
        if (exp.empty() || exp.back() != ')') throw ValidationError("malformed power sum term '" + std::string(term) + "'");
        exp.remove_suffix(1);
        const std::size_t slash = exp.find('/');
        if (slash == std::string_view::npos) throw ValidationError("malformed power sum exponent '" + std::string(exp) + "'");
        const unsigned long r = std::stoul(std::string(exp.substr(0, slash)));
        const unsigned long q = std::stoul(std::string(exp.substr(slash + 1)));
        if (q == 0 || r >= q) throw ValidationError("power sum exponent out of range in '" + std::string(term) + "'");
        std::vector<Rational> coeffs(q);
        coeffs[r] = c;
        total += DyadicPowerSum(q, std::move(coeffs));
      }
      if (plus == std::string_view::npos) break;
      pos = plus + 3;
    }
    return total;
  }

 private:
  DyadicPowerSum lifted(unsigned long q) const {
    if (q == q_) return *this;
    const unsigned long step = q / q_;
    std::vector<Rational> coeffs(q);
    for (std::size_t r = 0; r < q_; ++r) coeffs[r * step] = coeffs_[r];
    return {q, std::move(coeffs)};
  }

  // [lo, hi] ∋ Σ a_r 2^{-r/q}, with every operation rounded outward.
  void enclose(mpfr_ptr lo, mpfr_ptr hi, mpfr_prec_t prec) const {
    detail::Mpfr two(prec), y_lo(prec), y_hi(prec), t_lo(prec), t_hi(prec), a_lo(prec), a_hi(prec), p_lo(prec),
        p_hi(prec);
    mpfr_set_ui(two.get(), 2, MPFR_RNDN);
    mpfr_rootn_ui(y_lo.get(), two.get(), q_, MPFR_RNDD);
    mpfr_rootn_ui(y_hi.get(), two.get(), q_, MPFR_RNDU);
    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);
    for (std::size_t r = 0; r < q_; ++r) {
      const Rational& c = coeffs_[r];
      if (sgn(c) == 0) continue;
      // t = 2^{-r/q} = 1 / y^r
      mpfr_pow_ui(t_hi.get(), y_lo.get(), r, MPFR_RNDD);
      mpfr_ui_div(t_hi.get(), 1, t_hi.get(), MPFR_RNDU);
      mpfr_pow_ui(t_lo.get(), y_hi.get(), r, MPFR_RNDU);
      mpfr_ui_div(t_lo.get(), 1, t_lo.get(), MPFR_RNDD);
      mpfr_set_q(a_lo.get(), c.get_mpq_t(), MPFR_RNDD);
      mpfr_set_q(a_hi.get(), c.get_mpq_t(), MPFR_RNDU);
      if (sgn(c) > 0) {
        mpfr_mul(p_lo.get(), a_lo.get(), t_lo.get(), MPFR_RNDD);
        mpfr_mul(p_hi.get(), a_hi.get(), t_hi.get(), MPFR_RNDU);
      } else {
        mpfr_mul(p_lo.get(), a_lo.get(), t_hi.get(), MPFR_RNDD);
        mpfr_mul(p_hi.get(), a_hi.get(), t_lo.get(), MPFR_RNDU);
      }
      mpfr_add(lo, lo, p_lo.get(), MPFR_RNDD);
      mpfr_add(hi, hi, p_hi.get(), MPFR_RNDU);
    }
  }

  unsigned long q_ = 1;
  std::vector<Rational> coeffs_;
};

inline int sign(const DyadicPowerSum& x) { return x.sign(); }
inline std::string to_string(const DyadicPowerSum& x) { return x.to_string(); }

using ContentCapacity = BasicCapacity<DyadicPowerSum>;

inline constexpr int kMaxDyadicCells = 1 << 24;

/// The dyadic tree of [0,1)^d down to cells of side 2^-L. Cells are indexed
/// in Morton order: bit b of coordinate i is bit b·d + i of the index.
class DyadicDomain {
 public:
  DyadicDomain(int dimension, int depth) : d_(dimension), l_(depth) {
    if (d_ < 1) throw ValidationError("dyadic dimension must be >= 1");
    if (l_ < 0) throw ValidationError("dyadic depth must be >= 0");
    if (d_ * l_ > 24) throw ValidationError("dyadic domain has more than 2^24 cells");
  }
  int dimension() const { return d_; }
  int depth() const { return l_; }
  std::size_t cell_count() const { return std::size_t{1} << (d_ * l_); }
  /// Number of cubes at level k.
  std::size_t cubes_at(int k) const { return std::size_t{1} << (d_ * k); }

  std::size_t morton(std::span<const long> coords, int level) const {
    if (coords.size() != static_cast<std::size_t>(d_))
      throw ValidationError("cell has " + std::to_string(coords.size()) + " coordinates, expected " + std::to_string(d_));
    std::size_t index = 0;
    for (int i = 0; i < d_; ++i) {
      const long c = coords[static_cast<std::size_t>(i)];
      if (c < 0 || c >= (1L << level))
        throw ValidationError("coordinate " + std::to_string(c) + " outside [0, " + std::to_string(1L << level) + ")");
      for (int b = 0; b < level; ++b)
        if ((c >> b) & 1L) index |= std::size_t{1} << (b * d_ + i);
    }
    return index;
  }
  std::vector<long> coordinates(std::size_t index, int level) const {
    std::vector<long> c(static_cast<std::size_t>(d_), 0);
    for (int b = 0; b < level; ++b)
      for (int i = 0; i < d_; ++i)
        if ((index >> (b * d_ + i)) & 1U) c[static_cast<std::size_t>(i)] |= 1L << b;
    return c;
  }

  friend bool operator==(const DyadicDomain&, const DyadicDomain&) = default;

 private:
  int d_;
  int l_;
};

/// A union of finest-level cells.
class DyadicCellSet {
 public:
  explicit DyadicCellSet(DyadicDomain domain) : domain_(domain), member_(domain.cell_count(), 0) {}

  static DyadicCellSet from_coordinates(DyadicDomain domain, const std::vector<std::vector<long>>& cells) {
    DyadicCellSet s(domain);
    for (const auto& c : cells) s.member_[domain.morton(c, domain.depth())] = 1;
    return s;
  }
  /// Bit i of `mask` selects the cell with Morton index i.
  static DyadicCellSet from_mask(DyadicDomain domain, Mask mask) {
    if (domain.cell_count() > 32) throw ValidationError("mask form needs at most 32 cells");
    DyadicCellSet s(domain);
    for (std::size_t i = 0; i < domain.cell_count(); ++i) s.member_[i] = (mask >> i) & 1U;
    return s;
  }

  const DyadicDomain& domain() const { return domain_; }
  bool contains(std::size_t index) const { return member_[index] != 0; }
  void insert(std::size_t index) { member_.at(index) = 1; }
  std::size_t count() const { return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), 1)); }
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < member_.size(); ++i)
      if (member_[i]) out.push_back(i);
    return out;
  }

 private:
  DyadicDomain domain_;
  std::vector<char> member_;
};

struct DyadicCube {
  int level = 0;              // side 2^-level
  std::vector<long> coords;   // in [0, 2^level)
  friend bool operator==(const DyadicCube&, const DyadicCube&) = default;
};

struct CoverSolution {
  DyadicPowerSum value;
  std::vector<DyadicCube> cubes;  // in Morton order of the finest cells they start at
  bool beta_above_dimension = false;
  bool exact_rational = false;  // β is an integer, so the value is rational
};

/// H̃^β_∞(E): min over covers by dyadic cubes of Σ side^β. Ties between a
/// cube and the best cover by its children go to the single cube.
inline CoverSolution content(const DyadicCellSet& e, const Rational& beta) {
  const DyadicDomain dom = e.domain();
  const int d = dom.dimension();
  const int l = dom.depth();
  if (sgn(beta) <= 0) throw ValidationError("exponent β must be positive");

  std::vector<DyadicPowerSum> side_power;
  for (int k = 0; k <= l; ++k) side_power.push_back(DyadicPowerSum::power(k, beta));

  // prefix[i] = #cells of E with Morton index < i
  std::vector<std::size_t> prefix(dom.cell_count() + 1, 0);
  for (std::size_t i = 0; i < dom.cell_count(); ++i) prefix[i + 1] = prefix[i] + (e.contains(i) ? 1 : 0);

  // take_single[k][j]: the optimal cover of cube (k, j) is the cube itself
  std::vector<std::vector<char>> take_single(static_cast<std::size_t>(l) + 1);
  for (int k = 0; k <= l; ++k) take_single[static_cast<std::size_t>(k)].assign(dom.cubes_at(k), 0);

  auto occupied = [&](int k, std::size_t j) {
    const std::size_t width = std::size_t{1} << (d * (l - k));
    return prefix[(j + 1) * width] > prefix[j * width];
  };
  auto solve = [&](auto& self, int k, std::size_t j) -> DyadicPowerSum {
    if (!occupied(k, j)) return DyadicPowerSum();
    if (k == l) {
      take_single[static_cast<std::size_t>(k)][j] = 1;
      return side_power[static_cast<std::size_t>(k)];
    }
    DyadicPowerSum children;
    const std::size_t fan = std::size_t{1} << d;
    for (std::size_t c = 0; c < fan; ++c) children += self(self, k + 1, j * fan + c);
    if (side_power[static_cast<std::size_t>(k)] <= children) {
      take_single[static_cast<std::size_t>(k)][j] = 1;
      return side_power[static_cast<std::size_t>(k)];
    }
    return children;
  };

  CoverSolution out;
  out.value = solve(solve, 0, 0);
  out.beta_above_dimension = beta > Rational(d);
  out.exact_rational = beta.get_den() == 1;

  auto collect = [&](auto& self, int k, std::size_t j) -> void {
    if (!occupied(k, j)) return;
    if (take_single[static_cast<std::size_t>(k)][j]) {
      out.cubes.push_back({k, dom.coordinates(j, k)});
      return;
    }
    const std::size_t fan = std::size_t{1} << d;
    for (std::size_t c = 0; c < fan; ++c) self(self, k + 1, j * fan + c);
  };
  collect(collect, 0, 0);
  return out;
}

struct CertificateCheck {
  bool covers = false;
  bool value_matches = false;
  DyadicPowerSum recomputed;
  std::optional<std::size_t> uncovered_cell;  // Morton index
  bool valid() const { return covers && value_matches; }
};

/// Independent verifier: every cell of E lies in a listed cube and the
/// listed value equals Σ side^β.
inline CertificateCheck cover_certificate_check(const DyadicCellSet& e, const Rational& beta,
                                                const CoverSolution& solution) {
  const DyadicDomain dom = e.domain();
  const int d = dom.dimension();
  const int l = dom.depth();
  CertificateCheck check;
  std::vector<char> covered(dom.cell_count(), 0);
  for (const auto& cube : solution.cubes) {
    if (cube.level < 0 || cube.level > l) throw ValidationError("cube level out of range");
    check.recomputed += DyadicPowerSum::power(cube.level, beta);
    const std::size_t j = dom.morton(cube.coords, cube.level);
    const std::size_t width = std::size_t{1} << (d * (l - cube.level));
    for (std::size_t i = j * width; i < (j + 1) * width; ++i) covered[i] = 1;
  }
  check.covers = true;
  for (std::size_t i : e.indices())
    if (!covered[i]) {
      check.covers = false;
      check.uncovered_cell = i;
      break;
    }
  check.value_matches = check.recomputed == solution.value;
  return check;
}

/// The content as a set function on the finest cells (ground point i is the
/// cell with Morton index i).
inline ContentCapacity export_capacity(const DyadicDomain& dom, const Rational& beta) {
  if (dom.cell_count() > 24)
    throw ValidationError("capacity export needs at most 24 cells, the domain has " + std::to_string(dom.cell_count()));
  const GroundSet u(static_cast<int>(dom.cell_count()));
  return ContentCapacity::from_function(u, [&](const SubsetMask& a) {
    return Extended<DyadicPowerSum>(content(DyadicCellSet::from_mask(dom, a.bits()), beta).value);
  });
}

/// The same table over the rationals; only possible for integer β.
inline Capacity export_rational_capacity(const DyadicDomain& dom, const Rational& beta) {
  if (beta.get_den() != 1) throw ValidationError("rational export needs an integer exponent β");
  const ContentCapacity h = export_capacity(dom, beta);
  return Capacity::from_function(h.universe(), [&](const SubsetMask& a) { return ExtReal(h(a).value().rational_value()); });
}

}  // namespace choquet

#endif  // CHOQUET_HAUSDORFF_HPP
