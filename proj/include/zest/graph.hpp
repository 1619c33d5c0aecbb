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

#ifndef ZEST_GRAPH_HPP_
#define ZEST_GRAPH_HPP_

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zest {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace defaults {
inline constexpr int kHadamardOrderGuard = 24;
inline constexpr int kHammingPrimeGuard = 5;
inline constexpr int kAlphaVertexGuard = 64;
inline constexpr int kThetaVertexGuard = 64;
inline constexpr int kCohomVertexGuard = 64;
inline constexpr std::size_t kCliqueCountGuard = 1u << 20;
inline constexpr std::size_t kTypeClassGuard = 200000;
}  // namespace defaults

using Edge = std::pair<int, int>;

// Finite simple graph on vertices 0..n-1. Equality is labeled equality:
// same vertex count and identical edge sets.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertices);
  // Edges are validated (0 <= u < v < vertices, no duplicates) and stored
  // sorted. Loops and out-of-range endpoints are rejected.
  Graph(int vertices, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;

  bool adjacent(int u, int v) const;
  // The "adjacent or equal" relation: u == v or uv is an edge.
  bool adjacent_or_equal(int u, int v) const { return u == v || adjacent(u, v); }
  int degree(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> nbrs_;
};

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);  // n >= 3

// Orthogonality graph of {+-1}^n sign vectors: bit i of the vertex index is 1
// iff coordinate i is -1; edges join vectors that are orthogonal, i.e. whose
// indices differ in exactly n/2 bit positions. Requires n % 4 == 0.
Graph hadamard_graph(int n, int order_guard = defaults::kHadamardOrderGuard);

// Vertices are the binary strings of length 4p-1 and Hamming weight 2p
// (bit i of the stored mask = position i), in increasing mask order; edges
// join strings at Hamming distance exactly 2p. Requires p an odd prime.
Graph hamming_weight_graph(int p, int prime_guard = defaults::kHammingPrimeGuard);

Graph complement(const Graph& g);
// Vertex (g, h) has index g * |V(H)| + h. (g,h) ~ (g',h') iff the pairs are
// distinct and g ="adjacent or equal" g' and h ="adjacent or equal" h'.
Graph strong_product(const Graph& g, const Graph& h);
// Vertices of h are shifted by |V(g)|.
Graph disjoint_union(const Graph& g, const Graph& h);
// perm maps old vertex v to new vertex perm[v]; perm must be a permutation.
Graph relabel(const Graph& g, const std::vector<int>& perm);

bool is_prime(int n);

}  // namespace zest

#endif  // ZEST_GRAPH_HPP_
