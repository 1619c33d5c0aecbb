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

#include "zest/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace zest {

Graph::Graph(int vertices) : n_(vertices), nbrs_(std::max(vertices, 0)) {
  if (vertices < 0) throw GraphError("negative vertex count");
}

Graph::Graph(int vertices, std::vector<Edge> edges) : Graph(vertices) {
  std::sort(edges.begin(), edges.end());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [u, v] = edges[k];
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("loop edge rejected");
    if (u > v) throw GraphError("edge not in (min,max) order");
    if (k > 0 && edges[k] == edges[k - 1]) throw GraphError("duplicate edge");
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
  }
  for (auto& lst : nbrs_) std::sort(lst.begin(), lst.end());
  edges_ = std::move(edges);
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw GraphError("vertex out of range");
  return nbrs_[v];
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw GraphError("vertex out of range");
  if (u == v) return false;
  const auto& lst = nbrs_[u];
  return std::binary_search(lst.begin(), lst.end(), v);
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

Graph hadamard_graph(int n, int order_guard) {
  if (n <= 0 || n % 4 != 0) throw GraphError("hadamard graph needs n divisible by 4");
  if (n > order_guard) throw GraphError("hadamard graph order exceeds guard");
  const std::uint32_t count = 1u << n;
  std::vector<Edge> e;
  for (std::uint32_t x = 0; x < count; ++x)
    for (std::uint32_t y = x + 1; y < count; ++y)
      if (std::popcount(x ^ y) == n / 2) e.emplace_back(static_cast<int>(x), static_cast<int>(y));
  return Graph(static_cast<int>(count), std::move(e));
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Graph hamming_weight_graph(int p, int prime_guard) {
  if (!is_prime(p) || p == 2) throw GraphError("hamming weight graph needs an odd prime");
  if (p > prime_guard) throw GraphError("hamming weight graph prime exceeds guard");
  const int len = 4 * p - 1;
  const int weight = 2 * p;
  std::vector<std::uint64_t> verts;
  // Gosper's hack enumerates the weight-2p masks in increasing order.
  std::uint64_t v = (std::uint64_t{1} << weight) - 1;
  const std::uint64_t limit = std::uint64_t{1} << len;
  while (v < limit) {
    verts.push_back(v);
    std::uint64_t c = v & (~v + 1), r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  std::vector<Edge> e;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (std::popcount(verts[i] ^ verts[j]) == weight)
        e.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph(static_cast<int>(verts.size()), std::move(e));
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph strong_product(const Graph& g, const Graph& h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  const long long total = static_cast<long long>(ng) * nh;
  std::vector<Edge> e;
  for (long long a = 0; a < total; ++a) {
    const int g1 = static_cast<int>(a / nh), h1 = static_cast<int>(a % nh);
    for (long long b = a + 1; b < total; ++b) {
      const int g2 = static_cast<int>(b / nh), h2 = static_cast<int>(b % nh);
      if (g.adjacent_or_equal(g1, g2) && h.adjacent_or_equal(h1, h2))
        e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return Graph(static_cast<int>(total), std::move(e));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int off = g.vertex_count();
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + off, v + off);
  return Graph(off + h.vertex_count(), std::move(e));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) throw GraphError("not a permutation");
    seen[v] = true;
  }
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    int a = perm[u], b = perm[v];
    if (a > b) std::swap(a, b);
    e.emplace_back(a, b);
  }
  return Graph(n, std::move(e));
}

}  // namespace zest
