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

#ifndef CHOQUET_SIMPLEX_HPP
#define CHOQUET_SIMPLEX_HPP

#include <cstddef>
#include <vector>

#include "choquet/rational.hpp"

namespace choquet {

/// max c·x  subject to  A x <= b,  x >= 0,  with b >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;  // rows
  std::vector<Rational> b;
  std::vector<Rational> c;
};

struct LpSolution {
  enum class Status { Optimal, Unbounded };
  Status status = Status::Optimal;
  Rational value;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

/// Exact primal simplex in dictionary form started from the slack basis,
/// with Bland's smallest-index rule for both the entering and the leaving
/// variable, so degenerate pivots cannot cycle.
///
/// The dictionary keeps one row per constraint and one column per nonbasic
/// variable (always n of them), so memory is m * n whatever the slack count.
inline LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.b.size();
  const std::size_t n = lp.c.size();
  if (lp.a.size() != m) throw ValidationError("LP: row count does not match b");
  for (const auto& row : lp.a)
    if (row.size() != n) throw ValidationError("LP: row length does not match c");
  for (const auto& bi : lp.b)
    if (sgn(bi) < 0) throw ValidationError("LP: the slack basis needs b >= 0");

  // x_B = rhs - tab * x_N ;  z = z0 + obj · x_N
  std::vector<std::vector<Rational>> tab = lp.a;
  std::vector<Rational> rhs = lp.b;
  std::vector<Rational> obj = lp.c;
  Rational z0(0);
  std::vector<std::size_t> basic(m), nonbasic(n);  // variable labels; slacks are n + i
  for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;

  LpSolution out;
  Rational ratio, best_ratio, factor;
  for (;;) {
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(obj[j]) > 0 && (col == n || nonbasic[j] < nonbasic[col])) col = j;
    if (col == n) break;

    std::size_t row = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(tab[i][col]) <= 0) continue;
      ratio = rhs[i] / tab[i][col];
      if (row == m || ratio < best_ratio || (ratio == best_ratio && basic[i] < basic[row])) {
        row = i;
        best_ratio = ratio;
      }
    }
    if (row == m) {
      out.status = LpSolution::Status::Unbounded;
      return out;
    }

    const Rational pivot = tab[row][col];
    rhs[row] /= pivot;
    for (std::size_t j = 0; j < n; ++j)
      if (j != col) tab[row][j] /= pivot;
    tab[row][col] = 1 / pivot;

    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || sgn(tab[i][col]) == 0) continue;
      factor = tab[i][col];
      rhs[i] -= factor * rhs[row];
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) tab[i][j] -= factor * tab[row][j];
      tab[i][col] = -factor * tab[row][col];
    }
    factor = obj[col];
    z0 += factor * rhs[row];
    for (std::size_t j = 0; j < n; ++j)
      if (j != col) obj[j] -= factor * tab[row][j];
    obj[col] = -factor * tab[row][col];

    std::swap(basic[row], nonbasic[col]);
    ++out.pivots;
  }

  out.value = z0;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basic[i] < n) out.x[basic[i]] = rhs[i];
  return out;
}

}  // namespace choquet

#endif  // CHOQUET_SIMPLEX_HPP
