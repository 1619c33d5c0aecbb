// Copyright 2026 The zest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZEST_SIMPLEX_HPP_
#define ZEST_SIMPLEX_HPP_

#include <vector>

#include "zest/rational.hpp"

namespace zest {

struct LpSolution {
  bool feasible = false;
  bool bounded = false;
  Rational objective;
  std::vector<Rational> x;     // structural variables
  std::vector<Rational> dual;  // one multiplier per constraint
};

// Exact two-phase tableau simplex with Bland's rule (anti-cycling,
// deterministic): minimize c.x subject to A x >= b, x >= 0.
// Duals are read off the surplus columns' reduced costs.
LpSolution simplex_min_ge(const std::vector<std::vector<Rational>>& A,
                          const std::vector<Rational>& b,
                          const std::vector<Rational>& c);

}  // namespace zest

#endif  // ZEST_SIMPLEX_HPP_
