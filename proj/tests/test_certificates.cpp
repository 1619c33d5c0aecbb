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

#include "zest/certificates.hpp"

using namespace zest;

namespace {

ScaledMatrix unit_col(std::vector<GaussianRational> entries) {
  Matrix m(static_cast<int>(entries.size()), 1);
  Rational n2(0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m.at(static_cast<int>(i), 0) = entries[i];
    n2 += entries[i].norm2();
  }
  return ScaledMatrix{std::move(m), Rational(1) / n2};
}

// Identity-style form for (G, 1) <= (G, 1).
TransportInput identity_input(const Graph& g) {
  TransportInput in;
  in.target = AElement(g, 1);
  in.h = g;
  for (int v = 0; v < g.vertex_count(); ++v) {
    in.form.phi.push_back(v);
    in.form.isometries.push_back(unit_col({GaussianRational(1)}));
  }
  return in;
}

// e_g vectors with the all-ones handle: a valid orthonormal representation of
// any graph, value |V|.
OrthonormalRepCertificate trivial_rep(int n) {
  OrthonormalRepCertificate cert;
  for (int v = 0; v < n; ++v) {
    ScaledVector u;
    u.entries.assign(n, GaussianRational(0));
    u.entries[v] = GaussianRational(1);
    cert.vectors.push_back(std::move(u));
  }
  ScaledVector c;
  c.entries.assign(n, GaussianRational(1));
  cert.handle.push_back(std::move(c));
  return cert;
}

// Coordinate lines: a valid subspace representation of any graph, value n.
SubspaceRepC coordinate_lines(int n) {
  SubspaceRepC rep;
  rep.a = n;
  rep.b = 1;
  for (int v = 0; v < n; ++v) {
    std::vector<GaussianRational> row(n);
    row[v] = GaussianRational(1);
    rep.spans.push_back({std::move(row)});
  }
  return rep;
}

// Coordinate projections: valid projective representation of any graph.
ProjectiveRep coordinate_projections(int n) {
  ProjectiveRep rep;
  rep.a = n;
  rep.b = 1;
  for (int v = 0; v < n; ++v) rep.projections.push_back(Matrix::unit(n, n, v, v));
  return rep;
}

}  // namespace

TEST_CASE("classical realization") {
  CHECK(classical_realization(AElement(cycle_graph(5), 1)) == cycle_graph(5));
  CHECK(classical_realization(AElement(complete_graph(1), 2)) == empty_graph(2));
  // K_2 boxtimes K2bar is a perfect matching on 4 vertices.
  Graph m = classical_realization(AElement(complete_graph(2), 2));
  CHECK(m.vertex_count() == 4);
  CHECK(m.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
  // Terms concatenate.
  AElement s = a_add(AElement(complete_graph(2), 1), AElement(complete_graph(1), 2));
  Graph both = classical_realization(s);
  CHECK(both.vertex_count() == 4);
  CHECK(both.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("unit form from a general special form") {
  // Identity on (K_1, 2) becomes the two coordinate vectors on K2bar.
  AElement q2(complete_graph(1), 2);
  SpecialForm id{{0}, {ScaledMatrix{Matrix::identity(2), Rational(1)}}};
  TransportInput in = special_form_classical(q2, q2, id);
  CHECK(in.h == empty_graph(2));
  REQUIRE(in.form.phi == std::vector<int>{0, 0});
  CHECK(in.form.isometries[0].matrix.at(0, 0) == GaussianRational(1));
  CHECK(in.form.isometries[0].matrix.at(1, 0) == GaussianRational(0));
  CHECK(in.form.isometries[1].matrix.at(1, 0) == GaussianRational(1));
  CHECK(verify_special_form(AElement(in.h, 1), q2, in.form).ok);

  SpecialForm bad{{0}, {ScaledMatrix{Matrix::identity(2), Rational(2)}}};
  CHECK_THROWS_AS(special_form_classical(q2, q2, bad), TransportError);
}

TEST_CASE("theta transport") {
  // Trivial case: single vertex.
  TransportInput k1 = identity_input(complete_graph(1));
  ThetaTransport t1 = transport_theta(k1, {trivial_rep(1)});
  CHECK(t1.value == Rational(1));
  CHECK(t1.input_bound == Rational(1));

  // Identity on K2bar transports the trivial representation at value 2.
  TransportInput k2b = identity_input(empty_graph(2));
  ThetaTransport t2 = transport_theta(k2b, {trivial_rep(2)});
  CHECK(t2.value == Rational(2));
  CHECK(t2.input_bound == Rational(2));

  // K2bar <= Q_2: transported value exactly 2 = theta(K2bar).
  AElement q2(complete_graph(1), 2);
  SpecialForm id{{0}, {ScaledMatrix{Matrix::identity(2), Rational(1)}}};
  TransportInput in = special_form_classical(q2, q2, id);
  ThetaTransport t3 = transport_theta(in, {trivial_rep(1)});
  CHECK(t3.value == Rational(2));
  CHECK(t3.input_bound == Rational(2));
  // The transported vectors live in C^{1*2*2}.
  CHECK(t3.certificate.vectors[0].entries.size() == 4);

  // Mixed sum: C_5 (+) Q_2 with H = C_5 disjoint K2bar.
  AElement s = a_add(AElement(cycle_graph(5), 1), AElement(complete_graph(1), 2));
  TransportInput mixed;
  mixed.target = s;
  mixed.h = disjoint_union(cycle_graph(5), empty_graph(2));
  for (int v = 0; v < 5; ++v) {
    mixed.form.phi.push_back(v);
    mixed.form.isometries.push_back(unit_col({GaussianRational(1)}));
  }
  mixed.form.phi.push_back(5);
  mixed.form.isometries.push_back(unit_col({GaussianRational(1), GaussianRational(0)}));
  mixed.form.phi.push_back(5);
  mixed.form.isometries.push_back(unit_col({GaussianRational(0), GaussianRational(1)}));
  ThetaTransport t4 = transport_theta(mixed, {trivial_rep(5), trivial_rep(1)});
  CHECK(t4.input_bound == Rational(7));  // 5*1 + 1*2
  CHECK(t4.value <= t4.input_bound);
  CHECK(t4.value >= Rational(4));  // theta(H) = theta(C_5) + 2 > 4

  // A rejected input representation.
  OrthonormalRepCertificate broken = trivial_rep(2);
  broken.vectors[1].entries[0] = GaussianRational(1);  // now not orthogonal
  CHECK_THROWS_AS(transport_theta(k2b, {broken}), TransportError);
}

TEST_CASE("haemers transport") {
  TransportInput k2b = identity_input(empty_graph(2));
  HaemersTransport h1 = transport_haemers_c(k2b, {coordinate_lines(2)});
  CHECK(h1.value == Rational(2));
  CHECK(h1.input_bound == Rational(2));
  CHECK(h1.certificate.a == 2);
  CHECK(h1.certificate.b == 1);

  AElement q2(complete_graph(1), 2);
  SpecialForm id{{0}, {ScaledMatrix{Matrix::identity(2), Rational(1)}}};
  TransportInput in = special_form_classical(q2, q2, id);
  HaemersTransport h2 = transport_haemers_c(in, {coordinate_lines(1)});
  CHECK(h2.value == Rational(2));
  CHECK(h2.certificate.a == 2);

  // Mixed denominators force padding to the lcm.
  AElement s = a_add(AElement(empty_graph(2), 1), AElement(complete_graph(1), 2));
  TransportInput mix;
  mix.target = s;
  mix.h = disjoint_union(empty_graph(2), empty_graph(2));
  for (int v = 0; v < 2; ++v) {
    mix.form.phi.push_back(v);
    mix.form.isometries.push_back(unit_col({GaussianRational(1)}));
  }
  mix.form.phi.push_back(2);
  mix.form.isometries.push_back(unit_col({GaussianRational(1), GaussianRational(0)}));
  mix.form.phi.push_back(2);
  mix.form.isometries.push_back(unit_col({GaussianRational(0), GaussianRational(1)}));
  SubspaceRepC wide;  // K2bar representation with denominator 2
  wide.a = 4;
  wide.b = 2;
  {
    auto e = [](int i) {
      std::vector<GaussianRational> row(4);
      row[i] = GaussianRational(1);
      return row;
    };
    wide.spans = {{e(0), e(1)}, {e(2), e(3)}};
  }
  HaemersTransport h3 = transport_haemers_c(mix, {wide, coordinate_lines(1)});
  CHECK(h3.certificate.b == 2);
  CHECK(h3.certificate.a == 8);  // 4*1 + (1*2)*2
  CHECK(h3.value == Rational(4));
  CHECK(h3.input_bound == Rational(4));

  SubspaceRepC degenerate = coordinate_lines(2);
  degenerate.spans[1] = degenerate.spans[0];
  CHECK_THROWS_AS(transport_haemers_c(k2b, {degenerate}), TransportError);
}

TEST_CASE("projective transport") {
  TransportInput k2b = identity_input(empty_graph(2));
  ProjectiveTransport p1 = transport_projective(k2b, {coordinate_projections(2)});
  CHECK(p1.value == Rational(2));
  CHECK(p1.input_bound == Rational(2));

  // Q_2 case with a Hadamard unit-vector pair instead of coordinates.
  AElement q2(complete_graph(1), 2);
  TransportInput had;
  had.target = q2;
  had.h = empty_graph(2);
  had.form.phi = {0, 0};
  had.form.isometries.push_back(unit_col({GaussianRational(1), GaussianRational(1)}));
  had.form.isometries.push_back(unit_col({GaussianRational(1), GaussianRational(-1)}));
  ProjectiveTransport p2 = transport_projective(had, {coordinate_projections(1)});
  CHECK(p2.value == Rational(2));
  // Projections are genuine rank-1 idempotents with quarter entries.
  CHECK(p2.certificate.projections[0].at(0, 1) == GaussianRational(Rational(1, 2)));

  // Padding: mix b=1 and b=2 representations.
  AElement s = a_add(AElement(empty_graph(2), 1), AElement(complete_graph(1), 2));
  TransportInput mix;
  mix.target = s;
  mix.h = disjoint_union(empty_graph(2), empty_graph(2));
  for (int v = 0; v < 2; ++v) {
    mix.form.phi.push_back(v);
    mix.form.isometries.push_back(unit_col({GaussianRational(1)}));
  }
  mix.form.phi.push_back(2);
  mix.form.isometries.push_back(unit_col({GaussianRational(1), GaussianRational(0)}));
  mix.form.phi.push_back(2);
  mix.form.isometries.push_back(unit_col({GaussianRational(0), GaussianRational(1)}));
  ProjectiveRep doubled;
  doubled.a = 4;
  doubled.b = 2;
  doubled.projections = {Matrix::unit(4, 4, 0, 0) + Matrix::unit(4, 4, 1, 1),
                         Matrix::unit(4, 4, 2, 2) + Matrix::unit(4, 4, 3, 3)};
  ProjectiveTransport p3 = transport_projective(mix, {doubled, coordinate_projections(1)});
  CHECK(p3.certificate.b == 2);
  CHECK(p3.value == Rational(4));

  ProjectiveRep broken = coordinate_projections(2);
  broken.projections[0] = broken.projections[0].scaled(GaussianRational(2));
  CHECK_THROWS_AS(transport_projective(k2b, {broken}), TransportError);
}

TEST_CASE("transports compose with the clique construction") {
  Graph omega = hadamard_graph(4);
  auto cliques = disjoint_cliques(omega, 4);
  REQUIRE(cliques.size() == 4);

  TransportInput in;
  in.target = AElement(omega, 4);
  in.h = empty_graph(16);
  for (const auto& clique : cliques)
    for (int v : clique) {
      in.form.phi.push_back(v);
      std::vector<GaussianRational> u;
      for (int i = 0; i < 4; ++i) u.push_back(GaussianRational((v >> i & 1) ? -1 : 1));
      in.form.isometries.push_back(unit_col(std::move(u)));
    }

  ThetaTransport t = transport_theta(in, {trivial_rep(16)});
  CHECK(t.input_bound == Rational(64));
  CHECK(t.value >= Rational(16));  // soundness: certifies theta(K16bar) = 16
  CHECK(t.value <= Rational(64));

  HaemersTransport h = transport_haemers_c(in, {coordinate_lines(16)});
  CHECK(h.value == Rational(64));

  ProjectiveTransport p = transport_projective(in, {coordinate_projections(16)});
  CHECK(p.value == Rational(64));
}
