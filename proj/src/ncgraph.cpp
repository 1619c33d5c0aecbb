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

#include "zest/ncgraph.hpp"

#include <utility>

namespace zest {

NcGraph::NcGraph(int ambient_dim, std::vector<Matrix> generators, std::vector<int> block_dims)
    : ambient_(ambient_dim),
      span_(static_cast<std::size_t>(ambient_dim) * ambient_dim),
      blocks_(std::move(block_dims)) {
  if (ambient_dim <= 0) throw NcGraphError("ambient dimension must be positive");
  for (auto& g : generators) {
    if (g.rows() != ambient_ || g.cols() != ambient_)
      throw NcGraphError("generator shape does not match ambient dimension");
    if (span_.insert(vectorize(g))) basis_.push_back(std::move(g));
  }
  if (!contains(Matrix::identity(ambient_)))
    throw NcGraphError("identity is not in the span");
  for (const Matrix& b : basis_)
    if (!contains(b.adjoint())) throw NcGraphError("span is not adjoint closed");
}

bool NcGraph::equal_span(const NcGraph& o) const {
  if (ambient_ != o.ambient_) return false;
  if (dim() != o.dim()) return false;
  for (const Matrix& b : basis_)
    if (!o.contains(b)) return false;
  for (const Matrix& b : o.basis_)
    if (!contains(b)) return false;
  return true;
}

NcGraph NcGraph::from_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw NcGraphError("from_graph needs a nonempty graph");
  std::vector<Matrix> gens;
  gens.reserve(static_cast<std::size_t>(n) + 2 * g.edges().size());
  for (int x = 0; x < n; ++x) gens.push_back(Matrix::unit(n, n, x, x));
  for (auto [u, v] : g.edges()) {
    gens.push_back(Matrix::unit(n, n, u, v));
    gens.push_back(Matrix::unit(n, n, v, u));
  }
  return NcGraph(n, std::move(gens));
}

NcGraph NcGraph::quantum_ideal(int d) {
  if (d <= 0) throw NcGraphError("quantum ideal needs d >= 1");
  return NcGraph(d, {Matrix::identity(d)});
}

NcGraph NcGraph::classical_ideal(int d) {
  if (d <= 0) throw NcGraphError("classical ideal needs d >= 1");
  std::vector<Matrix> gens;
  for (int i = 0; i < d; ++i) gens.push_back(Matrix::unit(d, d, i, i));
  return NcGraph(d, std::move(gens));
}

NcGraph NcGraph::tensor(const NcGraph& s, const NcGraph& t) {
  std::vector<Matrix> gens;
  gens.reserve(static_cast<std::size_t>(s.dim()) * t.dim());
  for (const Matrix& a : s.basis())
    for (const Matrix& b : t.basis()) gens.push_back(a.kron(b));
  return NcGraph(s.ambient_dim() * t.ambient_dim(), std::move(gens));
}

NcGraph NcGraph::direct_sum(const NcGraph& s, const NcGraph& t) {
  const int a = s.ambient_dim(), b = t.ambient_dim();
  const Matrix za(a, a), zb(b, b);
  std::vector<Matrix> gens;
  gens.reserve(static_cast<std::size_t>(s.dim()) + t.dim());
  for (const Matrix& m : s.basis()) gens.push_back(m.direct_sum(zb));
  for (const Matrix& m : t.basis()) gens.push_back(za.direct_sum(m));
  std::vector<int> blocks;
  if (s.block_dims().empty()) {
    blocks.push_back(a);
  } else {
    blocks = s.block_dims();
  }
  if (t.block_dims().empty()) {
    blocks.push_back(b);
  } else {
    blocks.insert(blocks.end(), t.block_dims().begin(), t.block_dims().end());
  }
  return NcGraph(a + b, std::move(gens), std::move(blocks));
}

}  // namespace zest
