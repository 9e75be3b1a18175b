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

#ifndef CHOQUET_CAPACITY_HPP
#define CHOQUET_CAPACITY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "choquet/domain.hpp"

namespace choquet {

/// A set function H: 2^X -> [0, inf] stored as a dense table indexed by
/// subset mask. Nothing beyond nonnegativity is assumed; every axiom is
/// checked on demand with check_axiom().
///
/// T is the scalar of finite values: Rational for everything user-facing,
/// DyadicPowerSum for Hausdorff contents with a fractional exponent.
template <class T>
class BasicCapacity {
 public:
  using value_type = Extended<T>;

  BasicCapacity(GroundSet universe, std::vector<value_type> table)
      : universe_(universe), table_(std::move(table)) {
    if (table_.size() != universe.subset_count())
      throw ValidationError("capacity table has " + std::to_string(table_.size()) +
                            " entries, expected 2^" + std::to_string(universe.size()));
    for (std::size_t a = 0; a < table_.size(); ++a)
      if (table_[a].is_finite() && sign(table_[a].value()) < 0)
        throw ValidationError("capacity value at mask " + std::to_string(a) + " is negative");
  }

  /// Builds the table by evaluating fn(SubsetMask) on every subset.
  template <class Fn>
  static BasicCapacity from_function(GroundSet universe, Fn&& fn) {
    std::vector<value_type> table;
    table.reserve(universe.subset_count());
    for (Mask a = 0; a <= universe.full_bits(); ++a) {
      table.emplace_back(fn(SubsetMask(universe, a)));
      if (a == universe.full_bits()) break;
    }
    return BasicCapacity(universe, std::move(table));
  }

  const GroundSet& universe() const { return universe_; }
  std::size_t size() const { return table_.size(); }

  const value_type& operator()(const SubsetMask& a) const {
    require_same(universe_, a.universe(), "capacity evaluation");
    return table_[a.bits()];
  }
  const value_type& at(Mask a) const { return table_[a]; }
  const std::vector<value_type>& table() const { return table_; }

  bool is_finite() const {
    for (const auto& v : table_)
      if (v.is_infinite()) return false;
    return true;
  }

  friend bool operator==(const BasicCapacity& a, const BasicCapacity& b) {
    return a.universe_ == b.universe_ && a.table_ == b.table_;
  }

 private:
  GroundSet universe_;
  std::vector<value_type> table_;
};

using Capacity = BasicCapacity<Rational>;

inline Capacity additive_capacity(GroundSet universe, std::span<const Rational> masses) {
  if (masses.size() != static_cast<std::size_t>(universe.size()))
    throw ValidationError("additive capacity needs one mass per point");
  for (const auto& m : masses)
    if (sgn(m) < 0) throw ValidationError("point masses must be nonnegative");
  return Capacity::from_function(universe, [&](const SubsetMask& a) {
    Rational s(0);
    for (int x : a.points()) s += masses[static_cast<std::size_t>(x)];
    return ExtReal(s);
  });
}

/// The axiom menu. InnerRegular and OuterRegular concern infinite
/// monotone sequences of sets and are vacuous on a finite ground set.
enum class Axiom {
  EmptySet,
  Monotone,
  FiniteSubadditive,
  CountableSubadditive,
  StronglySubadditive,
  Semifinite,
  LocallyFinite,
  ZeroCapacityRegular,
  InnerRegular,
  OuterRegular,
};

inline constexpr Axiom kAllAxioms[] = {
    Axiom::EmptySet,      Axiom::Monotone,           Axiom::FiniteSubadditive,
    Axiom::CountableSubadditive, Axiom::StronglySubadditive, Axiom::Semifinite,
    Axiom::LocallyFinite, Axiom::ZeroCapacityRegular, Axiom::InnerRegular,
    Axiom::OuterRegular,
};

inline std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::EmptySet: return "empty-set";
    case Axiom::Monotone: return "monotone";
    case Axiom::FiniteSubadditive: return "finite-subadd";
    case Axiom::CountableSubadditive: return "countable-subadd";
    case Axiom::StronglySubadditive: return "strong-subadd";
    case Axiom::Semifinite: return "semifinite";
    case Axiom::LocallyFinite: return "locally-finite";
    case Axiom::ZeroCapacityRegular: return "zero-capacity-regular";
    case Axiom::InnerRegular: return "inner-regular";
    case Axiom::OuterRegular: return "outer-regular";
  }
  return "unknown";
}

inline Axiom parse_axiom(std::string_view name) {
  for (Axiom a : kAllAxioms)
    if (axiom_name(a) == name) return a;
  if (name == "strongly-subadditive" || name == "submodular") return Axiom::StronglySubadditive;
  if (name == "finitely-subadditive" || name == "subadditive") return Axiom::FiniteSubadditive;
  throw ValidationError("unknown axiom '" + std::string(name) + "'");
}

/// The sets and capacity values that exhibit a violation.
///
/// Layouts by axiom:
///   EmptySet             sets {∅}        values {H(∅)}
///   Monotone             sets {E, F}     values {H(E), H(F)}, E ⊆ F
///   FiniteSubadditive    sets {E, F}     values {H(E), H(F), H(E∪F)}
///   StronglySubadditive  sets {E, F}     values {H(E), H(F), H(E∩F), H(E∪F)}
///   Semifinite           sets {A}        values {H(A), M, best finite H(D), D ⊆ A}
///   LocallyFinite        sets {A}        values {H(A)}
template <class T>
struct AxiomWitness {
  std::vector<SubsetMask> sets;
  std::vector<Extended<T>> values;
};

template <class T>
struct BasicAxiomReport {
  Axiom axiom;
  bool holds = true;
  std::optional<AxiomWitness<T>> witness;
  std::string note;
};

using AxiomReport = BasicAxiomReport<Rational>;

template <class T>
const Extended<T>& max_of(const Extended<T>& a, const Extended<T>& b) {
  return a < b ? b : a;
}

namespace detail {

template <class T>
std::optional<std::pair<Mask, Mask>> first_strong_violation(const BasicCapacity<T>& h) {
  const Mask full = h.universe().full_bits();
  for (Mask e = 0;; ++e) {
    for (Mask f = 0;; ++f) {
      if (h.at(e & f) + h.at(e | f) > h.at(e) + h.at(f)) return std::pair{e, f};
      if (f == full) break;
    }
    if (e == full) break;
  }
  return std::nullopt;
}

template <class T>
std::optional<std::pair<Mask, Mask>> first_subadditivity_violation(const BasicCapacity<T>& h) {
  const Mask full = h.universe().full_bits();
  for (Mask e = 0;; ++e) {
    for (Mask f = 0;; ++f) {
      if (h.at(e | f) > h.at(e) + h.at(f)) return std::pair{e, f};
      if (f == full) break;
    }
    if (e == full) break;
  }
  return std::nullopt;
}

/// best[A] = max{ H(D) : D ⊆ A, H(D) < inf }, or 0 when no such D exists.
template <class T>
std::vector<Extended<T>> finite_subset_max(const BasicCapacity<T>& h) {
  const int n = h.universe().size();
  std::vector<Extended<T>> best(h.size(), Extended<T>(T(0)));
  for (std::size_t a = 0; a < h.size(); ++a) {
    if (h.at(static_cast<Mask>(a)).is_finite()) best[a] = max_of(best[a], h.at(static_cast<Mask>(a)));
    for (int x = 0; x < n; ++x)
      if ((a >> x) & 1U) best[a] = max_of(best[a], best[a & ~(std::size_t{1} << x)]);
  }
  return best;
}

}  // namespace detail

/// The lexicographically smallest (E, F) by mask value with
/// H(E∩F) + H(E∪F) > H(E) + H(F), if any.
template <class T>
std::optional<std::pair<SubsetMask, SubsetMask>> find_strong_subadditivity_violation(
    const BasicCapacity<T>& h) {
  auto v = detail::first_strong_violation(h);
  if (!v) return std::nullopt;
  return std::pair{SubsetMask(h.universe(), v->first), SubsetMask(h.universe(), v->second)};
}

/// Semifinite check against explicit targets M: every A with H(A) = inf
/// must contain D with M <= H(D) < inf, for each target M.
template <class T>
BasicAxiomReport<T> check_semifinite(const BasicCapacity<T>& h, const std::vector<Extended<T>>& targets) {
  BasicAxiomReport<T> report{Axiom::Semifinite};
  const auto best = detail::finite_subset_max(h);
  for (std::size_t a = 0; a < h.size(); ++a) {
    if (h.at(static_cast<Mask>(a)).is_finite()) continue;
    for (const auto& m : targets) {
      if (best[a] < m) {
        report.holds = false;
        report.witness = AxiomWitness<T>{{SubsetMask(h.universe(), static_cast<Mask>(a))},
                                         {h.at(static_cast<Mask>(a)), m, best[a]}};
        return report;
      }
    }
  }
  return report;
}

/// Targets for the semifinite axiom: every finite table value plus one
/// value strictly above all of them.
template <class T>
std::vector<Extended<T>> semifinite_targets(const BasicCapacity<T>& h) {
  std::vector<Extended<T>> targets;
  Extended<T> top(T(0));
  for (const auto& v : h.table()) {
    if (v.is_infinite()) continue;
    targets.push_back(v);
    top = max_of(top, v);
  }
  targets.push_back(top + Extended<T>(T(1)));
  return targets;
}

template <class T>
BasicAxiomReport<T> check_axiom(const BasicCapacity<T>& h, Axiom axiom) {
  BasicAxiomReport<T> report{axiom};
  const GroundSet u = h.universe();
  const Mask full = u.full_bits();
  auto fail = [&](std::vector<SubsetMask> sets, std::vector<Extended<T>> values) {
    report.holds = false;
    report.witness = AxiomWitness<T>{std::move(sets), std::move(values)};
  };

  switch (axiom) {
    case Axiom::EmptySet:
      if (!(h.at(0) == Extended<T>(T(0)))) fail({SubsetMask::empty(u)}, {h.at(0)});
      break;

    case Axiom::Monotone:
      for (Mask a = 0;; ++a) {
        for (int x = 0; x < u.size(); ++x) {
          const Mask b = a | (Mask{1} << x);
          if (b != a && h.at(b) < h.at(a)) {
            fail({SubsetMask(u, a), SubsetMask(u, b)}, {h.at(a), h.at(b)});
            return report;
          }
        }
        if (a == full) break;
      }
      break;

    case Axiom::FiniteSubadditive:
      if (auto v = detail::first_subadditivity_violation(h)) {
        auto [e, f] = *v;
        fail({SubsetMask(u, e), SubsetMask(u, f)}, {h.at(e), h.at(f), h.at(e | f)});
      }
      break;

    case Axiom::CountableSubadditive: {
      report.note =
          "finite ground set: a countable family has finitely many distinct members, so this "
          "reduces to empty-set plus finite subadditivity";
      auto empty = check_axiom(h, Axiom::EmptySet);
      auto finite = empty.holds ? check_axiom(h, Axiom::FiniteSubadditive) : empty;
      report.holds = finite.holds;
      report.witness = finite.witness;
      if (!finite.holds)
        report.note += empty.holds ? " (finite subadditivity fails)" : " (H(empty) != 0)";
      break;
    }

    case Axiom::StronglySubadditive:
      if (auto v = detail::first_strong_violation(h)) {
        auto [e, f] = *v;
        fail({SubsetMask(u, e), SubsetMask(u, f)}, {h.at(e), h.at(f), h.at(e & f), h.at(e | f)});
      }
      break;

    case Axiom::Semifinite: {
      auto r = check_semifinite(h, semifinite_targets(h));
      report.holds = r.holds;
      report.witness = r.witness;
      report.note =
          "targets: every finite table value plus one value above the largest; any infinite "
          "entry therefore fails on a finite ground set";
      break;
    }

    case Axiom::LocallyFinite:
      report.note = "discrete topology: every set is bounded, so this requires H(A) < inf for all A";
      for (Mask a = 0;; ++a) {
        if (h.at(a).is_infinite()) {
          fail({SubsetMask(u, a)}, {h.at(a)});
          break;
        }
        if (a == full) break;
      }
      break;

    case Axiom::ZeroCapacityRegular:
      report.note = "vacuous: every subset is open in the discrete topology";
      break;

    case Axiom::InnerRegular:
    case Axiom::OuterRegular:
      report.note = "vacuous at finite scale: every monotone sequence of subsets stabilizes";
      break;
  }
  return report;
}

/// Re-evaluates a witness against the table; true iff it is a genuine
/// violation of the report's axiom.
template <class T>
bool witness_violates(const BasicCapacity<T>& h, const BasicAxiomReport<T>& report) {
  if (!report.witness) return false;
  const auto& w = *report.witness;
  auto val = [&](const SubsetMask& s) { return h(s); };
  switch (report.axiom) {
    case Axiom::EmptySet:
      return w.sets.size() == 1 && w.sets[0].is_empty() && !(val(w.sets[0]) == Extended<T>(T(0)));
    case Axiom::Monotone:
      return w.sets.size() == 2 && w.sets[0].is_subset_of(w.sets[1]) && val(w.sets[1]) < val(w.sets[0]);
    case Axiom::FiniteSubadditive:
      return w.sets.size() == 2 && val(w.sets[0] | w.sets[1]) > val(w.sets[0]) + val(w.sets[1]);
    case Axiom::CountableSubadditive:
      if (w.sets.size() == 1)
        return w.sets[0].is_empty() && !(val(w.sets[0]) == Extended<T>(T(0)));
      return w.sets.size() == 2 && val(w.sets[0] | w.sets[1]) > val(w.sets[0]) + val(w.sets[1]);
    case Axiom::StronglySubadditive:
      return w.sets.size() == 2 &&
             val(w.sets[0] & w.sets[1]) + val(w.sets[0] | w.sets[1]) > val(w.sets[0]) + val(w.sets[1]);
    case Axiom::Semifinite: {
      if (w.sets.size() != 1 || w.values.size() != 3 || val(w.sets[0]).is_finite()) return false;
      const auto& target = w.values[1];
      const Mask a = w.sets[0].bits();
      for (Mask d = a;; d = (d - 1) & a) {
        if (h.at(d).is_finite() && h.at(d) >= target) return false;
        if (d == 0) break;
      }
      return true;
    }
    case Axiom::LocallyFinite:
      return w.sets.size() == 1 && val(w.sets[0]).is_infinite();
    default:
      return false;
  }
}

/// A -> H(A ∩ S).
template <class T>
BasicCapacity<T> contract(const BasicCapacity<T>& h, const SubsetMask& s) {
  require_same(h.universe(), s.universe(), "contract");
  std::vector<Extended<T>> table;
  table.reserve(h.size());
  for (std::size_t a = 0; a < h.size(); ++a) table.push_back(h.at(static_cast<Mask>(a) & s.bits()));
  return BasicCapacity<T>(h.universe(), std::move(table));
}

/// A -> max{ H(D) : D ⊆ A, H(D) < inf }, with max of nothing = 0.
template <class T>
BasicCapacity<T> regularize(const BasicCapacity<T>& h) {
  return BasicCapacity<T>(h.universe(), detail::finite_subset_max(h));
}

}  // namespace choquet

#endif  // CHOQUET_CAPACITY_HPP
