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

#include "zest/cliques.hpp"

#include <algorithm>
#include <bit>

namespace zest {

namespace {

// Fixed-width bitset over 64-bit words, sized at runtime.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(int n) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void clear(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return w[i >> 6] >> (i & 63) & 1; }
  bool empty() const {
    for (auto x : w)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  Bits and_with(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w.size(); ++k) r.w[k] &= o.w[k];
    return r;
  }
  int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t k = 0; k < w.size(); ++k) c += std::popcount(w[k] & o.w[k]);
    return c;
  }
  template <typename F>
  void for_each(F f) const {
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::uint64_t x = w[k];
      while (x) {
        int b = std::countr_zero(x);
        f(static_cast<int>(k * 64 + b));
        x &= x - 1;
      }
    }
  }
};

std::vector<Bits> adjacency_bits(const Graph& g) {
  std::vector<Bits> adj(g.vertex_count(), Bits(g.vertex_count()));
  for (auto [u, v] : g.edges()) {
    adj[u].set(v);
    adj[v].set(u);
  }
  return adj;
}

struct BronKerbosch {
  const std::vector<Bits>& adj;
  std::size_t guard;
  std::vector<std::vector<int>> out;
  std::vector<int> r;

  void run(Bits p, Bits x) {
    if (p.empty() && x.empty()) {
      if (out.size() >= guard) throw GraphError("maximal clique count exceeds guard");
      out.push_back(r);
      return;
    }
    // Pivot: vertex of P u X with the most neighbours in P, smallest index on ties.
    int pivot = -1, best = -1;
    auto consider = [&](int v) {
      int c = adj[v].count_and(p);
      if (c > best) {
        best = c;
        pivot = v;
      }
    };
    p.for_each(consider);
    x.for_each(consider);
    Bits cand = p;
    for (std::size_t k = 0; k < cand.w.size(); ++k) cand.w[k] &= ~adj[pivot].w[k];
    std::vector<int> order;
    cand.for_each([&](int v) { order.push_back(v); });
    for (int v : order) {
      r.push_back(v);
      run(p.and_with(adj[v]), x.and_with(adj[v]));
      r.pop_back();
      p.clear(v);
      x.set(v);
    }
  }
};

struct MaxClique {
  const std::vector<Bits>& adj;
  int n;
  int best = 0;

  // Greedy coloring of the candidate set in increasing vertex order; returns
  // vertices with their color (1-based), colors nondecreasing.
  void color_sort(const Bits& p, std::vector<std::pair<int, int>>& out) const {
    out.clear();
    Bits uncolored = p;
    int color = 0;
    while (!uncolored.empty()) {
      ++color;
      Bits cls = uncolored;
      while (!cls.empty()) {
        int v = -1;
        for (std::size_t k = 0; k < cls.w.size(); ++k)
          if (cls.w[k]) {
            v = static_cast<int>(k * 64 + std::countr_zero(cls.w[k]));
            break;
          }
        out.emplace_back(v, color);
        uncolored.clear(v);
        cls.clear(v);
        for (std::size_t k = 0; k < cls.w.size(); ++k) cls.w[k] &= ~adj[v].w[k];
      }
    }
  }

  void expand(const Bits& p, int depth) {
    std::vector<std::pair<int, int>> order;
    color_sort(p, order);
    Bits rem = p;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [v, c] = *it;
      if (depth + c <= best) return;  // colors only decrease from here
      Bits next = rem.and_with(adj[v]);
      if (depth + 1 > best) best = depth + 1;
      if (!next.empty()) expand(next, depth + 1);
      rem.clear(v);
    }
  }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, std::size_t count_guard) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  auto adj = adjacency_bits(g);
  BronKerbosch bk{adj, count_guard, {}, {}};
  Bits p(n), x(n);
  for (int v = 0; v < n; ++v) p.set(v);
  bk.run(p, x);
  return std::move(bk.out);
}

std::vector<std::vector<int>> cliques_of_size(const Graph& g, int d, std::size_t count_guard) {
  if (d <= 0) throw GraphError("clique size must be positive");
  const int n = g.vertex_count();
  auto adj = adjacency_bits(g);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Extends cur with vertices above its last element, lexicographic order.
  auto rec = [&](auto&& self, const Bits& cand, int low) -> void {
    if (static_cast<int>(cur.size()) == d) {
      if (out.size() >= count_guard) throw GraphError("clique count exceeds guard");
      out.push_back(cur);
      return;
    }
    const int need = d - static_cast<int>(cur.size());
    if (cand.count() < need) return;
    for (int v = low; v <= n - need; ++v) {
      if (!cand.test(v)) continue;
      cur.push_back(v);
      self(self, cand.and_with(adj[v]), v + 1);
      cur.pop_back();
    }
  };
  Bits all(n);
  for (int v = 0; v < n; ++v) all.set(v);
  rec(rec, all, 0);
  return out;
}

int clique_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  auto adj = adjacency_bits(g);
  MaxClique mc{adj, n, 0};
  Bits p(n);
  for (int v = 0; v < n; ++v) p.set(v);
  mc.expand(p, 0);
  return mc.best;
}

}  // namespace zest
