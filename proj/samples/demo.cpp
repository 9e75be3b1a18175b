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

// A short tour: an integral with its layers, a duality gap, and a dyadic
// content with its optimal cover.

#include <iostream>

#include "choquet/duality.hpp"
#include "choquet/hausdorff.hpp"

using namespace choquet;

int main() {
  const GroundSet u(2);
  const Capacity h(u, {Rational(0), Rational(1), Rational(2), Rational(5, 2)});
  const StepFunction f = StepFunction::of(u, {3, 1});
  const IntegralValue v = choquet::choquet(f, h);
  std::cout << "integral of " << to_string(f) << " = " << to_string(v.value) << "\n";
  for (const auto& layer : v.breakdown)
    std::cout << "  level " << to_string(layer.level) << "  gap " << to_string(layer.gap) << "  H "
              << to_string(layer.capacity) << "\n";

  const Capacity bad(u, {Rational(0), Rational(1), Rational(1), Rational(3)});
  const DualityReport d = dual_value(StepFunction::of(u, {1, 1}), bad, DualMethod::Both);
  std::cout << "integral " << to_string(d.choquet_value) << ", best dominated measure " << to_string(d.dual_value)
            << ", gap " << to_string(d.gap) << "\n";

  const DyadicDomain dom(1, 2);
  const DyadicCellSet e = DyadicCellSet::from_coordinates(dom, {{0}, {3}});
  for (const Rational beta : {Rational(1), Rational(1, 2)}) {
    const CoverSolution c = content(e, beta);
    std::cout << "content at beta " << to_string(beta) << " = " << c.value.to_string() << " with " << c.cubes.size()
              << " cube(s)\n";
  }
  return ExtReal(Rational(9, 2)) == v.value && d.gap == Gap{Gap::Kind::Finite, Rational(1)} ? 0 : 1;
}
