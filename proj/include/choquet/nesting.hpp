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

// Rearranging a finite family of sets into a nested chain with the same
// indicator sum. Under a strongly subadditive capacity each rearrangement
// step can only lower the sum of capacities, which is the algebraic core
// of the sublinearity of the Choquet integral.

#ifndef CHOQUET_NESTING_HPP
#define CHOQUET_NESTING_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "choquet/capacity.hpp"

namespace choquet {

inline constexpr std::size_t kMaxFamilySize = 64;

/// A_1 ⊆ A_2 ⊆ ... ⊆ A_n.
class NestedFamily {
 public:
  explicit NestedFamily(std::vector<SubsetMask> sets) : sets_(std::move(sets)) {
    for (std::size_t i = 1; i < sets_.size(); ++i)
      if (!sets_[i - 1].is_subset_of(sets_[i]))
        throw InvariantViolation("family is not nested at position " + std::to_string(i));
  }
  const std::vector<SubsetMask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  const SubsetMask& operator[](std::size_t i) const { return sets_[i]; }

 private:
  std::vector<SubsetMask> sets_;
};

namespace detail {

inline void check_family(std::span<const SubsetMask> c, const char* what) {
  if (c.empty()) throw ValidationError(std::string(what) + ": empty family");
  if (c.size() > kMaxFamilySize)
    throw ValidationError(std::string(what) + ": families are capped at " + std::to_string(kMaxFamilySize) + " sets");
  for (const auto& s : c) require_same(c.front().universe(), s.universe(), what);
}

}  // namespace detail

/// Σ_i χ_{C_i}(x) for every point x.
inline std::vector<int> indicator_counts(std::span<const SubsetMask> family) {
  if (family.empty()) return {};
  std::vector<int> counts(static_cast<std::size_t>(family.front().universe().size()), 0);
  for (const auto& s : family)
    for (int x : s.points()) ++counts[static_cast<std::size_t>(x)];
  return counts;
}

/// D_1, ..., D_{n-1} ⊆ D_n with Σχ_D = Σχ_C and D_n = ∪C_i, by the
/// induction: rearrange the first n-1 sets into Ẽ, then replace the last
/// one with Ẽ_{n-1} ∩ C_n and append Ẽ_{n-1} ∪ C_n.
inline std::vector<SubsetMask> lemma_step(std::span<const SubsetMask> c) {
  detail::check_family(c, "lemma_step");
  if (c.size() == 1) return {c.front()};
  std::vector<SubsetMask> d = lemma_step(c.first(c.size() - 1));
  const SubsetMask top = d.back();
  const SubsetMask& last = c.back();
  d.back() = top & last;
  d.push_back(top | last);
  return d;
}

/// The recursion's intermediate families: level 0 is the input, level j is
/// the lemma_step output whose first n-j sets feed the next level.
struct NestingTrace {
  std::vector<std::vector<SubsetMask>> d_families;
};

/// A_i = points lying in at least n - i + 1 of the C_j, computed by the
/// recursion (lemma_step, then recurse on the first n-1 outputs) and
/// cross-checked against the counting formula.
inline NestedFamily nest(std::span<const SubsetMask> c, NestingTrace* trace = nullptr) {
  detail::check_family(c, "nest");
  std::vector<SubsetMask> chain;
  std::vector<SubsetMask> current(c.begin(), c.end());
  std::vector<SubsetMask> tops;  // A_n, A_{n-1}, ... as the recursion peels them off
  while (current.size() > 1) {
    std::vector<SubsetMask> d = lemma_step(current);
    if (trace) trace->d_families.push_back(d);
    tops.push_back(d.back());
    d.pop_back();
    current = std::move(d);
  }
  if (trace) trace->d_families.push_back(current);
  chain.push_back(current.front());
  for (auto it = tops.rbegin(); it != tops.rend(); ++it) chain.push_back(*it);

  const auto counts = indicator_counts(c);
  const int n = static_cast<int>(c.size());
  for (int i = 1; i <= n; ++i) {
    Mask expected = 0;
    for (std::size_t x = 0; x < counts.size(); ++x)
      if (counts[x] >= n - i + 1) expected |= Mask{1} << x;
    if (chain[static_cast<std::size_t>(i - 1)].bits() != expected)
      throw InvariantViolation("nest: A_" + std::to_string(i) + " disagrees with the count characterization");
  }
  return NestedFamily(std::move(chain));
}

inline NestedFamily nest(std::initializer_list<SubsetMask> c) {
  return nest(std::span<const SubsetMask>(c.begin(), c.size()));
}
inline std::vector<SubsetMask> lemma_step(std::initializer_list<SubsetMask> c) {
  return lemma_step(std::span<const SubsetMask>(c.begin(), c.size()));
}

/// A capacity that has passed the exhaustive strong-subadditivity check.
class StronglySubadditiveCapacity {
 public:
  static std::optional<StronglySubadditiveCapacity> verify(const Capacity& h) {
    if (!check_axiom(h, Axiom::StronglySubadditive).holds) return std::nullopt;
    return StronglySubadditiveCapacity(h);
  }
  const Capacity& capacity() const { return h_; }

 private:
  explicit StronglySubadditiveCapacity(Capacity h) : h_(std::move(h)) {}
  Capacity h_;
};

struct CapacitySumAudit {
  std::vector<SubsetMask> d_chain;
  NestedFamily a_chain;
  ExtReal sum_c;
  ExtReal sum_d;
  ExtReal sum_a;
  bool holds;  // ΣH(A) <= ΣH(D) <= ΣH(C)
};

inline ExtReal capacity_sum(std::span<const SubsetMask> family, const Capacity& h) {
  ExtReal s = Rational(0);
  for (const auto& set : family) s += h(set);
  return s;
}

inline CapacitySumAudit capacity_sum_audit(std::span<const SubsetMask> c, const StronglySubadditiveCapacity& verified) {
  const Capacity& h = verified.capacity();
  auto d = lemma_step(c);
  auto a = nest(c);
  ExtReal sum_c = capacity_sum(c, h);
  ExtReal sum_d = capacity_sum(d, h);
  ExtReal sum_a = capacity_sum(a.sets(), h);
  const bool holds = sum_a <= sum_d && sum_d <= sum_c;
  return {std::move(d), std::move(a), std::move(sum_c), std::move(sum_d), std::move(sum_a), holds};
}

/// Refuses unless H is strongly subadditive: without that hypothesis the
/// rearranged sums can exceed the original one.
inline CapacitySumAudit capacity_sum_audit(std::span<const SubsetMask> c, const Capacity& h) {
  auto verified = StronglySubadditiveCapacity::verify(h);
  if (!verified) {
    auto w = find_strong_subadditivity_violation(h);
    throw RefusalError("capacity sum audit needs a strongly subadditive capacity; H(E∩F)+H(E∪F) > H(E)+H(F) at E=" +
                       to_string(w->first) + ", F=" + to_string(w->second));
  }
  return capacity_sum_audit(c, *verified);
}

}  // namespace choquet

#endif  // CHOQUET_NESTING_HPP
