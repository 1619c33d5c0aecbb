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

#include <cmath>
#include <random>

#include "zest/cohom.hpp"

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

bool valid_cohom(const Graph& h, const Graph& g, const std::vector<int>& psi) {
  if (static_cast<int>(psi.size()) != h.vertex_count()) return false;
  for (int u = 0; u < h.vertex_count(); ++u)
    for (int v = u + 1; v < h.vertex_count(); ++v)
      if (!h.adjacent(u, v) && (psi[u] == psi[v] || g.adjacent(psi[u], psi[v]))) return false;
  return true;
}

ScaledMatrix column(std::vector<GaussianRational> entries, Rational scale2 = Rational(1)) {
  Matrix m(static_cast<int>(entries.size()), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), 0) = entries[i];
  return ScaledMatrix{std::move(m), std::move(scale2)};
}

// The +-1 orthogonality representation of the Hadamard graph on {+-1}^k.
std::vector<ScaledVector> sign_representation(int k) {
  std::vector<ScaledVector> rep;
  for (int v = 0; v < (1 << k); ++v) {
    ScaledVector u;
    for (int i = 0; i < k; ++i) u.entries.push_back(GaussianRational((v >> i & 1) ? -1 : 1));
    rep.push_back(std::move(u));
  }
  return rep;
}

}  // namespace

TEST_CASE("graph cohomomorphism search") {
  Graph c5 = cycle_graph(5);
  auto self = find_graph_cohomomorphism(c5, c5);
  REQUIRE(self.has_value());
  CHECK(valid_cohom(c5, c5, *self));

  CHECK(find_graph_cohomomorphism(empty_graph(2), c5).has_value());
  CHECK(!find_graph_cohomomorphism(empty_graph(3), c5).has_value());
  CHECK(find_graph_cohomomorphism(empty_graph(0), c5).has_value());
  CHECK_THROWS_AS(find_graph_cohomomorphism(empty_graph(65), c5), CohomError);

  // K_dbar <= G iff alpha(G) >= d, over random small graphs.
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(2 + trial % 7, 0.45, rng);
    const int alpha = independence_number(g);
    for (int d = 1; d <= alpha + 1; ++d)
      CHECK(find_graph_cohomomorphism(empty_graph(d), g).has_value() == (d <= alpha));
  }
}

TEST_CASE("cohomomorphisms transport monotone parameters") {
  std::mt19937 rng(5150);
  auto fcc = [](const Graph& gr) { return to_double(clique_cover_fractional(gr).value); };
  auto alpha_f = [](const Graph& gr) { return static_cast<double>(independence_number(gr)); };
  auto theta_f = [](const Graph& gr) { return lovasz_theta(gr).value; };
  int found = 0;
  for (int trial = 0; trial < 40 && found < 12; ++trial) {
    Graph h = random_graph(2 + trial % 4, 0.5, rng);
    Graph g = random_graph(4 + trial % 3, 0.35, rng);
    auto psi = find_graph_cohomomorphism(h, g);
    if (!psi) continue;
    ++found;
    REQUIRE(valid_cohom(h, g, *psi));
    AElement ha(h, 1), ga(g, 1);
    for (double ex : {1.0, 2.0}) {
      CHECK(evaluate(ha, alpha_f, ex) <= evaluate(ga, alpha_f, ex) + 1e-9);
      CHECK(evaluate(ha, theta_f, ex) <= evaluate(ga, theta_f, ex) + 1e-5);
      CHECK(evaluate(ha, fcc, ex) <= evaluate(ga, fcc, ex) + 1e-9);
    }
  }
  CHECK(found >= 12);
}

TEST_CASE("special form verification") {
  AElement k11(complete_graph(1), 1);
  SpecialForm id_form{{0}, {column({GaussianRational(1)})}};
  CHECK(verify_special_form(k11, k11, id_form).ok);

  // (K2bar, 1) <= (K1, 2): both vertices to the lone target vertex,
  // orthogonal unit columns.
  AElement t(empty_graph(2), 1), s(complete_graph(1), 2);
  SpecialForm good{{0, 0},
                   {column({GaussianRational(1), GaussianRational(0)}),
                    column({GaussianRational(0), GaussianRational(1)})}};
  CHECK(verify_special_form(t, s, good).ok);

  SpecialForm clash{{0, 0},
                    {column({GaussianRational(1), GaussianRational(0)}),
                     column({GaussianRational(1), GaussianRational(0)})}};
  WitnessCheck bad = verify_special_form(t, s, clash);
  CHECK(!bad.ok);
  CHECK(bad.reason.find("(0, 1)") != std::string::npos);

  // Wrong scale breaks the isometry condition.
  SpecialForm skew{{0, 0},
                   {column({GaussianRational(1), GaussianRational(0)}, Rational(2)),
                    column({GaussianRational(0), GaussianRational(1)})}};
  WitnessCheck notiso = verify_special_form(t, s, skew);
  CHECK(!notiso.ok);
  CHECK(notiso.reason.find("vertex 0") != std::string::npos);

  // Shape mismatch is a usage error.
  SpecialForm short_form{{0}, {column({GaussianRational(1)})}};
  CHECK_THROWS_AS(verify_special_form(t, s, short_form), CohomError);
}

TEST_CASE("kraus witnesses from special forms") {
  AElement k11(complete_graph(1), 1);
  SpecialForm id_form{{0}, {column({GaussianRational(1)})}};
  KrausWitness idw = kraus_from_special_form(k11, k11, id_form);
  REQUIRE(idw.operators.size() == 1);
  CHECK(idw.operators[0].matrix == Matrix::identity(1));
  CHECK(verify_kraus_witness(idw).ok);

  AElement t(empty_graph(2), 1), s(complete_graph(1), 2);
  SpecialForm good{{0, 0},
                   {column({GaussianRational(1), GaussianRational(0)}),
                    column({GaussianRational(0), GaussianRational(1)})}};
  KrausWitness w = kraus_from_special_form(t, s, good);
  // Sum E_i* E_i = I_2 by direct algebra.
  Matrix acc(2, 2);
  for (const auto& op : w.operators) acc = acc + op.matrix.adjoint() * op.matrix;
  CHECK(acc == Matrix::identity(2));
  CHECK(verify_kraus_witness(w).ok);

  // A scaled Hadamard isometry: (K1,2) <= (K1,2) with U = H/sqrt(2).
  Matrix had(2, 2);
  had.at(0, 0) = had.at(0, 1) = had.at(1, 0) = GaussianRational(1);
  had.at(1, 1) = GaussianRational(-1);
  AElement q2(complete_graph(1), 2);
  SpecialForm hf{{0}, {ScaledMatrix{had, Rational(1, 2)}}};
  REQUIRE(verify_special_form(q2, q2, hf).ok);
  CHECK(verify_kraus_witness(kraus_from_special_form(q2, q2, hf)).ok);

  // An isometry into a larger ideal: (K1,2) <= (K1,4).
  Matrix emb(4, 2);
  emb.at(0, 0) = emb.at(1, 1) = GaussianRational(1);
  AElement q4(complete_graph(1), 4);
  SpecialForm ef{{0}, {ScaledMatrix{emb, Rational(1)}}};
  REQUIRE(verify_special_form(q2, q4, ef).ok);
  CHECK(verify_kraus_witness(kraus_from_special_form(q2, q4, ef)).ok);

  // A mixed-dimension form: (K2bar,1) (+) (K1,2) <= (K1,1) (+) (K1,2).
  // Vertices 0,1 are the K2bar pair, vertex 2 is the Q_2 block.
  AElement tt = a_add(AElement(empty_graph(2), 1), AElement(complete_graph(1), 2));
  AElement ss = a_add(AElement(complete_graph(1), 1), AElement(complete_graph(1), 2));
  SpecialForm mixed{{1, 1, 1},
                    {column({GaussianRational(1), GaussianRational(0)}),
                     column({GaussianRational(0), GaussianRational(1)}),
                     ScaledMatrix{Matrix::identity(2), Rational(1)}}};
  // Vertex 2 has pi = 2 and must not clash with 0, 1: phi(2) = phi(0) and
  // 2 !~= 0 in T, so U_2* U_0 must vanish -- it does not, this form fails.
  CHECK(!verify_special_form(tt, ss, mixed).ok);
  // Sending the Q_2 block to the other target vertex works.
  SpecialForm split{{1, 1, 0},
                    {column({GaussianRational(1), GaussianRational(0)}),
                     column({GaussianRational(0), GaussianRational(1)}),
                     ScaledMatrix{Matrix(1, 2), Rational(1)}}};
  // ... but needs a genuine 1x2 "isometry", which cannot exist: C^2 -> C^1.
  CHECK(!verify_special_form(tt, ss, split).ok);
}

TEST_CASE("kraus witness verification modes") {
  AElement s(cycle_graph(5), 2);
  KrausWitness idw;
  idw.source = s;
  idw.target = s;
  idw.operators = {ScaledMatrix{Matrix::identity(10), Rational(1)}};
  CHECK(verify_kraus_witness(idw).ok);

  KrausWitness twice = idw;
  twice.operators[0].scale2 = Rational(4);
  WitnessCheck chk = verify_kraus_witness(twice);
  CHECK(!chk.ok);
  CHECK(chk.reason.find("completeness") != std::string::npos);

  // Floating mode accepts a tiny completeness perturbation that exact mode
  // rejects.
  KrausWitness wobble = idw;
  wobble.operators[0].scale2 = Rational(1) + Rational(1, 1000000000000LL);
  CHECK(!verify_kraus_witness(wobble).ok);
  wobble.floating = true;
  CHECK(verify_kraus_witness(wobble).ok);
  wobble.tol = 1e-15;
  CHECK(!verify_kraus_witness(wobble).ok);

  KrausWitness shapeless = idw;
  shapeless.operators[0].matrix = Matrix::identity(9);
  CHECK_THROWS_AS(verify_kraus_witness(shapeless), CohomError);
}

TEST_CASE("witness projection") {
  // T = (K1,2) <= S = (K1,1) (+) (K1,2), witness supported on the d=2 block.
  AElement t(complete_graph(1), 2);
  AElement s = a_add(AElement(complete_graph(1), 1), AElement(complete_graph(1), 2));
  Matrix e(3, 2);
  e.at(1, 0) = e.at(2, 1) = GaussianRational(1);
  KrausWitness w;
  w.source = t;
  w.target = s;
  w.operators = {ScaledMatrix{e, Rational(1)}};
  REQUIRE(verify_kraus_witness(w).ok);

  KrausWitness proj = project_witness(w, 2);
  REQUIRE(proj.target.terms().size() == 1);
  CHECK(proj.target.terms()[0].dim == 2);
  CHECK(proj.operators[0].matrix == Matrix::identity(2));
  CHECK(verify_kraus_witness(proj).ok);

  // q = 1 keeps everything.
  AElement t1(complete_graph(1), 1);
  Matrix f(3, 1);
  f.at(0, 0) = GaussianRational(1);
  KrausWitness w1;
  w1.source = t1;
  w1.target = s;
  w1.operators = {ScaledMatrix{f, Rational(1)}};
  REQUIRE(verify_kraus_witness(w1).ok);
  KrausWitness p1 = project_witness(w1, 1);
  CHECK(p1.target.terms().size() == 2);
  CHECK(p1.operators[0].matrix == f);

  // Invalid inputs are rejected.
  KrausWitness broken = w;
  broken.operators[0].scale2 = Rational(2);
  CHECK_THROWS_AS(project_witness(broken, 2), CohomError);
  CHECK_THROWS_AS(project_witness(w, 3), CohomError);
}

TEST_CASE("disjoint clique packing") {
  CHECK(disjoint_cliques(complete_graph(4), 4).size() == 1);
  Graph two_k3 = disjoint_union(complete_graph(3), complete_graph(3));
  auto packs = disjoint_cliques(two_k3, 3);
  REQUIRE(packs.size() == 2);
  CHECK(packs[0] == std::vector<int>{0, 1, 2});
  CHECK(packs[1] == std::vector<int>{3, 4, 5});

  auto matching = disjoint_cliques(cycle_graph(5), 2);
  REQUIRE(matching.size() == 2);
  CHECK(matching[0] == std::vector<int>{0, 1});
  CHECK(matching[1] == std::vector<int>{2, 3});

  // Hadamard graph on {+-1}^4: four disjoint 4-cliques, lexicographic first.
  auto omega = disjoint_cliques(hadamard_graph(4), 4);
  REQUIRE(omega.size() == 4);
  CHECK(omega[0] == std::vector<int>{0, 3, 5, 6});
  CHECK(omega[1] == std::vector<int>{1, 2, 4, 7});
  CHECK(omega[2] == std::vector<int>{8, 11, 13, 14});
  CHECK(omega[3] == std::vector<int>{9, 10, 12, 15});
}

TEST_CASE("witness from cliques") {
  // C_2 <= graphnc(K_2) (x) Q_2 with the coordinate vectors.
  std::vector<ScaledVector> coord = {
      ScaledVector{{GaussianRational(1), GaussianRational(0)}, Rational(1)},
      ScaledVector{{GaussianRational(0), GaussianRational(1)}, Rational(1)}};
  KrausWitness w = witness_from_cliques(complete_graph(2), 2, coord, {{0, 1}});
  CHECK(w.source.terms()[0].graph == empty_graph(2));
  CHECK(w.source.terms()[0].dim == 1);
  CHECK(verify_kraus_witness(w).ok);

  CHECK_THROWS_AS(witness_from_cliques(complete_graph(2), 2, coord, {{0, 1}, {0, 1}}),
                  CohomError);
  std::vector<ScaledVector> parallel = {coord[0], coord[0]};
  CHECK_THROWS_AS(witness_from_cliques(complete_graph(2), 2, parallel, {{0, 1}}), CohomError);

  // The +-1 representation of the Hadamard graph with the exact packing:
  // C_16 <= graphnc(Omega_4) (x) Q_4, verified in exact arithmetic.
  Graph omega = hadamard_graph(4);
  auto cliques = disjoint_cliques(omega, 4);
  KrausWitness big = witness_from_cliques(omega, 4, sign_representation(4), cliques);
  CHECK(big.source.terms()[0].graph.vertex_count() == 16);
  CHECK(verify_kraus_witness(big).ok);

  // Value consistency at the spectral point theta with exponent 1:
  // Md <= theta(G) * d.
  const double theta = lovasz_theta(omega).value;
  CHECK(16.0 <= theta * 4 + 1e-5);
}
