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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zest/ncgraph.hpp"

using namespace zest;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

std::vector<Graph> all_graphs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1) e.push_back(pairs[k]);
    out.emplace_back(n, std::move(e));
  }
  return out;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational i(Rational(0), Rational(1));
  CHECK(i * i == GaussianRational(-1));
  GaussianRational z(Rational(1, 2), Rational(-1, 3));
  CHECK(z * z.conj() == GaussianRational(z.norm2()));
  CHECK((z / z) == GaussianRational(1));
  CHECK_THROWS_AS(z / GaussianRational(0), ValueError);
}

TEST_CASE("matrix rank and kron") {
  Matrix a = Matrix::identity(3);
  CHECK(a.rank() == 3);
  Matrix b(2, 2);
  b.at(0, 0) = GaussianRational(1);
  b.at(0, 1) = GaussianRational(2);
  b.at(1, 0) = GaussianRational(2);
  b.at(1, 1) = GaussianRational(4);
  CHECK(b.rank() == 1);
  CHECK(a.kron(b).rank() == 3);
  CHECK(a.direct_sum(b).rank() == 4);
  CHECK((b * b).at(0, 0) == GaussianRational(5));
}

TEST_CASE("subspace basis membership") {
  SubspaceBasis s(4);
  CHECK(s.insert({{0, GaussianRational(1)}, {1, GaussianRational(1)}}));
  CHECK(s.insert({{1, GaussianRational(2)}}));
  CHECK(!s.insert({{0, GaussianRational(3)}, {1, GaussianRational(-5)}}));
  CHECK(s.rank() == 2);
  CHECK(s.contains({{0, GaussianRational(7)}}));
  CHECK(!s.contains({{2, GaussianRational(1)}}));
}

TEST_CASE("from_graph dimensions") {
  // dim = |V| + 2|E|.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(1 + trial % 6, 0.5, rng);
    NcGraph s = NcGraph::from_graph(g);
    CHECK(s.dim() == g.vertex_count() + 2 * g.edge_count());
    CHECK(s.ambient_dim() == g.vertex_count());
    CHECK(s.contains(Matrix::identity(g.vertex_count())));
  }
  CHECK_THROWS_AS(NcGraph::from_graph(Graph(0)), NcGraphError);
}

TEST_CASE("ideals") {
  NcGraph q3 = NcGraph::quantum_ideal(3);
  CHECK(q3.dim() == 1);
  NcGraph c3 = NcGraph::classical_ideal(3);
  CHECK(c3.dim() == 3);
  // C_d sits inside Q_d's commutant sense check: diagonals contain I.
  CHECK(c3.contains(Matrix::identity(3)));
  // from_graph(K1) tensor classical_ideal(d) equals diagonals.
  NcGraph t = NcGraph::tensor(NcGraph::from_graph(empty_graph(1)), c3);
  CHECK(t.equal_span(c3));
  CHECK_THROWS_AS(NcGraph::quantum_ideal(0), NcGraphError);
}

TEST_CASE("complete graph spans everything") {
  NcGraph s = NcGraph::from_graph(complete_graph(3));
  CHECK(s.dim() == 9);
  Matrix m(3, 3);
  m.at(0, 2) = GaussianRational(Rational(2, 7), Rational(1, 3));
  m.at(1, 1) = GaussianRational(5);
  CHECK(s.contains(m));
}

TEST_CASE("adjoint closure rejects non systems") {
  // span{I, E_01} is not adjoint closed.
  std::vector<Matrix> gens{Matrix::identity(2), Matrix::unit(2, 2, 0, 1)};
  CHECK_THROWS_AS(NcGraph(2, std::move(gens)), NcGraphError);
  // Missing identity.
  std::vector<Matrix> gens2{Matrix::unit(2, 2, 0, 0)};
  CHECK_THROWS_AS(NcGraph(2, std::move(gens2)), NcGraphError);
}

TEST_CASE("from_graph of strong product equals tensor of from_graphs") {
  for (const Graph& g : all_graphs(3)) {
    for (const Graph& h : all_graphs(3)) {
      NcGraph lhs = NcGraph::from_graph(strong_product(g, h));
      NcGraph rhs = NcGraph::tensor(NcGraph::from_graph(g), NcGraph::from_graph(h));
      CHECK(lhs.equal_span(rhs));
    }
  }
  std::mt19937 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = random_graph(4 + trial % 3, 0.45, rng);
    Graph h = random_graph(4 + (trial + 1) % 3, 0.45, rng);
    NcGraph lhs = NcGraph::from_graph(strong_product(g, h));
    NcGraph rhs = NcGraph::tensor(NcGraph::from_graph(g), NcGraph::from_graph(h));
    CHECK(lhs.equal_span(rhs));
  }
}

TEST_CASE("from_graph of disjoint union equals direct sum") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(1 + trial % 4, 0.5, rng);
    Graph h = random_graph(1 + (trial + 2) % 4, 0.5, rng);
    NcGraph lhs = NcGraph::from_graph(disjoint_union(g, h));
    NcGraph rhs = NcGraph::direct_sum(NcGraph::from_graph(g), NcGraph::from_graph(h));
    CHECK(lhs.equal_span(rhs));
    CHECK(rhs.block_dims() == std::vector<int>{g.vertex_count(), h.vertex_count()});
  }
}

TEST_CASE("tensor dimension multiplies for graph systems") {
  // Kron of independent spanning sets stays independent here.
  std::mt19937 rng(29);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = random_graph(1 + trial % 4, 0.5, rng);
    Graph h = random_graph(1 + (trial + 1) % 4, 0.5, rng);
    NcGraph a = NcGraph::from_graph(g), b = NcGraph::from_graph(h);
    CHECK(NcGraph::tensor(a, b).dim() == a.dim() * b.dim());
  }
}
