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

#ifndef ZEST_CLIQUES_HPP_
#define ZEST_CLIQUES_HPP_

#include <cstddef>
#include <vector>

#include "zest/graph.hpp"

namespace zest {

// All maximal cliques, Bron-Kerbosch with pivoting. Deterministic output
// order; throws GraphError if the count exceeds the guard.
std::vector<std::vector<int>> maximal_cliques(
    const Graph& g, std::size_t count_guard = defaults::kCliqueCountGuard);

// All cliques of size exactly d, in lexicographic order.
std::vector<std::vector<int>> cliques_of_size(
    const Graph& g, int d, std::size_t count_guard = defaults::kCliqueCountGuard);

// Exact maximum clique size, branch and bound with a greedy coloring bound.
int clique_number(const Graph& g);

}  // namespace zest

#endif  // ZEST_CLIQUES_HPP_
