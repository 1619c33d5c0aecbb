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

#include "zest/cohom.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace zest {

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Ambient layout of to_ncgraph: term blocks in order, each |V(G_d)| * d wide;
// vertex v of term t owns the d consecutive coordinates starting at
// block(t) + v*d.
struct AmbientLayout {
  std::vector<int> term_offset;  // per term
  int total = 0;

  explicit AmbientLayout(const AElement& s) {
    for (const Term& t : s.terms()) {
      term_offset.push_back(total);
      total += t.graph.vertex_count() * t.dim;
    }
  }

  int vertex_offset(const AElement& s, int global_vertex) const {
    const int t = s.term_of_vertex(global_vertex);
    const int local = global_vertex - s.vertex_offset(t);
    return term_offset[t] + local * s.terms()[t].dim;
  }
};

int term_dim_of_vertex(const AElement& s, int global_vertex) {
  return s.terms()[s.term_of_vertex(global_vertex)].dim;
}

bool proportional_to_identity(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  const GaussianRational c = m.at(0, 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (i == j ? !(m.at(i, j) == c) : !m.at(i, j).is_zero()) return false;
    }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_graph_cohomomorphism(const Graph& h, const Graph& g,
                                                          int vertex_guard) {
  if (h.vertex_count() > vertex_guard || g.vertex_count() > vertex_guard)
    throw CohomError("cohomomorphism search guard exceeded");
  const int nh = h.vertex_count(), ng = g.vertex_count();
  if (nh == 0) return std::vector<int>{};
  if (ng == 0) return std::nullopt;

  // Candidate order: fewest complement neighbors first, then index.
  std::vector<int> cobar_deg(ng, 0);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < ng; ++v)
      if (u != v && !g.adjacent(u, v)) ++cobar_deg[u];
  std::vector<int> order(ng);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return cobar_deg[a] < cobar_deg[b]; });

  std::vector<int> psi(nh, -1);
  auto assignable = [&](int u, int cand) {
    for (int v = 0; v < u; ++v) {
      const bool hbar = !h.adjacent(u, v);  // u != v always here
      if (!hbar) continue;
      if (psi[v] == cand || g.adjacent(cand, psi[v])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int u) -> bool {
    if (u == nh) return true;
    for (int cand : order) {
      if (!assignable(u, cand)) continue;
      psi[u] = cand;
      if (self(self, u + 1)) return true;
      psi[u] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return psi;
}

WitnessCheck verify_special_form(const AElement& t, const AElement& s, const SpecialForm& form) {
  const int nt = t.total_vertices();
  if (static_cast<int>(form.phi.size()) != nt ||
      static_cast<int>(form.isometries.size()) != nt)
    throw CohomError("special form must assign phi and an isometry to every source vertex");
  for (int h = 0; h < nt; ++h) {
    if (form.phi[h] < 0 || form.phi[h] >= s.total_vertices())
      throw CohomError("phi image out of range at vertex " + std::to_string(h));
    const ScaledMatrix& u = form.isometries[h];
    if (u.matrix.rows() != term_dim_of_vertex(s, form.phi[h]) ||
        u.matrix.cols() != term_dim_of_vertex(t, h))
      throw CohomError("isometry shape mismatch at vertex " + std::to_string(h));
    if (u.scale2 <= 0) throw CohomError("isometry scale must be positive");
  }

  for (int h = 0; h < nt; ++h) {
    const ScaledMatrix& u = form.isometries[h];
    Matrix gram = (u.matrix.adjoint() * u.matrix).scaled(GaussianRational(u.scale2));
    if (gram != Matrix::identity(u.matrix.cols()))
      return {false, "vertex " + std::to_string(h) + ": scaled U*U is not the identity"};
  }

  for (int h = 0; h < nt; ++h)
    for (int h2 = h + 1; h2 < nt; ++h2) {
      const bool trel = t.adjacent_or_equal(h, h2);
      const bool srel = s.adjacent_or_equal(form.phi[h], form.phi[h2]);
      if (!trel && !srel) continue;
      Matrix prod = form.isometries[h].matrix.adjoint() * form.isometries[h2].matrix;
      if (!trel) {
        if (!prod.is_zero())
          return {false, "pair " + pair_str(h, h2) +
                             ": non-related vertices with related images and U_h*U_h' != 0"};
      } else if (srel) {
        if (!proportional_to_identity(prod))
          return {false, "pair " + pair_str(h, h2) +
                             ": related vertices with related images but U_h*U_h' is not a "
                             "multiple of the identity"};
      }
    }
  return {true, {}};
}

KrausWitness kraus_from_special_form(const AElement& t, const AElement& s,
                                     const SpecialForm& form) {
  WitnessCheck chk = verify_special_form(t, s, form);
  if (!chk.ok) throw CohomError("special form invalid: " + chk.reason);
  const AmbientLayout lt(t), ls(s);
  KrausWitness w;
  w.source = t;
  w.target = s;
  for (int h = 0; h < t.total_vertices(); ++h) {
    const ScaledMatrix& u = form.isometries[h];
    Matrix e(ls.total, lt.total);
    const int roff = ls.vertex_offset(s, form.phi[h]);
    const int coff = lt.vertex_offset(t, h);
    for (int r = 0; r < u.matrix.rows(); ++r)
      for (int c = 0; c < u.matrix.cols(); ++c) e.at(roff + r, coff + c) = u.matrix.at(r, c);
    w.operators.push_back(ScaledMatrix{std::move(e), u.scale2});
  }
  return w;
}

namespace {

WitnessCheck verify_kraus_exact(const KrausWitness& w) {
  const AmbientLayout lt(w.source), ls(w.target);
  Matrix acc(lt.total, lt.total);
  for (const ScaledMatrix& op : w.operators)
    acc = acc + (op.matrix.adjoint() * op.matrix).scaled(GaussianRational(op.scale2));
  if (acc != Matrix::identity(lt.total))
    return {false, "completeness: sum of E_i* E_i differs from the identity"};

  const NcGraph target_nc = to_ncgraph(w.target);
  const NcGraph source_nc = to_ncgraph(w.source);
  const std::size_t k = w.operators.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Matrix ei_adj = w.operators[i].matrix.adjoint();
    for (std::size_t b = 0; b < target_nc.basis().size(); ++b) {
      const Matrix left = ei_adj * target_nc.basis()[b];
      if (left.is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j) {
        const Matrix x = left * w.operators[j].matrix;
        if (!source_nc.contains(x))
          return {false, "containment: operator pair " +
                             pair_str(static_cast<int>(i), static_cast<int>(j)) +
                             ", target basis element " + std::to_string(b)};
      }
    }
  }
  return {true, {}};
}

using CMat = Eigen::MatrixXcd;

CMat to_eigen(const ScaledMatrix& m) {
  CMat out(m.matrix.rows(), m.matrix.cols());
  const double s = std::sqrt(to_double(m.scale2));
  for (int i = 0; i < m.matrix.rows(); ++i)
    for (int j = 0; j < m.matrix.cols(); ++j) {
      const GaussianRational& e = m.matrix.at(i, j);
      out(i, j) = std::complex<double>(to_double(e.re), to_double(e.im)) * s;
    }
  return out;
}

CMat to_eigen_plain(const Matrix& m) {
  CMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out(i, j) = std::complex<double>(to_double(m.at(i, j).re), to_double(m.at(i, j).im));
  return out;
}

WitnessCheck verify_kraus_floating(const KrausWitness& w) {
  const AmbientLayout lt(w.source);
  std::vector<CMat> ops;
  for (const ScaledMatrix& op : w.operators) ops.push_back(to_eigen(op));
  CMat acc = CMat::Zero(lt.total, lt.total);
  for (const CMat& e : ops) acc += e.adjoint() * e;
  acc -= CMat::Identity(lt.total, lt.total);
  if (acc.norm() > w.tol)
    return {false, "completeness: residual " + std::to_string(acc.norm()) + " exceeds tol"};

  const NcGraph target_nc = to_ncgraph(w.target);
  const NcGraph source_nc = to_ncgraph(w.source);
  const int st = lt.total;
  CMat span(st * st, source_nc.dim());
  for (int b = 0; b < source_nc.dim(); ++b) {
    const CMat m = to_eigen_plain(source_nc.basis()[b]);
    span.col(b) = Eigen::Map<const Eigen::VectorXcd>(m.data(), st * st);
  }
  Eigen::ColPivHouseholderQR<CMat> qr(span);
  const std::size_t k = ops.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t b = 0; b < target_nc.basis().size(); ++b) {
      const CMat left = ops[i].adjoint() * to_eigen_plain(target_nc.basis()[b]);
      for (std::size_t j = 0; j < k; ++j) {
        CMat x = left * ops[j];
        Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(x.data(), st * st);
        const double residual = (span * qr.solve(v) - v).norm();
        if (residual > w.tol)
          return {false, "containment: operator pair " +
                             pair_str(static_cast<int>(i), static_cast<int>(j)) +
                             ", target basis element " + std::to_string(b) + ", residual " +
                             std::to_string(residual)};
      }
    }
  return {true, {}};
}

}  // namespace

WitnessCheck verify_kraus_witness(const KrausWitness& w) {
  if (w.source.is_zero() || w.target.is_zero())
    throw CohomError("witness endpoints must be nonzero");
  if (w.operators.empty()) throw CohomError("witness has no operators");
  const AmbientLayout lt(w.source), ls(w.target);
  for (const ScaledMatrix& op : w.operators) {
    if (op.matrix.rows() != ls.total || op.matrix.cols() != lt.total)
      throw CohomError("operator shape mismatch with the witness endpoints");
    if (op.scale2 <= 0) throw CohomError("operator scale must be positive");
  }
  return w.floating ? verify_kraus_floating(w) : verify_kraus_exact(w);
}

KrausWitness project_witness(const KrausWitness& w, int q) {
  if (w.source.terms().size() != 1)
    throw CohomError("projection requires a single-term source");
  if (w.source.terms()[0].dim != q)
    throw CohomError("projection dimension does not match the source term");
  WitnessCheck chk = verify_kraus_witness(w);
  if (!chk.ok) throw CohomError("input witness invalid: " + chk.reason);

  const AmbientLayout ls(w.target);
  std::vector<int> kept_rows;
  std::vector<Term> kept_terms;
  {
    int row = 0;
    for (const Term& t : w.target.terms()) {
      const int width = t.graph.vertex_count() * t.dim;
      if (t.dim >= q) {
        kept_terms.push_back(t);
        for (int r = 0; r < width; ++r) kept_rows.push_back(row + r);
      }
      row += width;
    }
  }
  if (kept_terms.empty()) throw CohomError("projection removes every target term");

  KrausWitness out;
  out.source = w.source;
  out.target = AElement(kept_terms);
  out.floating = w.floating;
  out.tol = w.tol;
  for (const ScaledMatrix& op : w.operators) {
    Matrix m(static_cast<int>(kept_rows.size()), op.matrix.cols());
    for (std::size_t r = 0; r < kept_rows.size(); ++r)
      for (int c = 0; c < op.matrix.cols(); ++c)
        m.at(static_cast<int>(r), c) = op.matrix.at(kept_rows[r], c);
    out.operators.push_back(ScaledMatrix{std::move(m), op.scale2});
  }
  WitnessCheck after = verify_kraus_witness(out);
  if (!after.ok) throw CohomError("projected witness fails verification: " + after.reason);
  return out;
}

std::vector<std::vector<int>> disjoint_cliques(const Graph& g, int d, std::size_t clique_guard) {
  if (d < 1) throw CohomError("clique size must be >= 1");
  const std::vector<std::vector<int>> cands = cliques_of_size(g, d, clique_guard);
  std::vector<std::vector<int>> best, cur;
  std::vector<char> used(g.vertex_count(), 0);
  int free_vertices = g.vertex_count();

  auto rec = [&](auto&& self, std::size_t k) -> void {
    const std::size_t remaining = cands.size() - k;
    const std::size_t cap =
        cur.size() + std::min<std::size_t>(remaining, static_cast<std::size_t>(free_vertices / d));
    if (cap <= best.size() && !best.empty()) return;
    if (k == cands.size()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    bool fits = true;
    for (int v : cands[k])
      if (used[v]) {
        fits = false;
        break;
      }
    if (fits) {
      for (int v : cands[k]) used[v] = 1;
      free_vertices -= d;
      cur.push_back(cands[k]);
      self(self, k + 1);
      cur.pop_back();
      free_vertices += d;
      for (int v : cands[k]) used[v] = 0;
    }
    self(self, k + 1);
  };
  rec(rec, 0);
  if (best.empty() && !cands.empty()) best = {cands[0]};
  return best;
}

KrausWitness witness_from_cliques(const Graph& g, int d, const std::vector<ScaledVector>& rep,
                                  const std::vector<std::vector<int>>& cliques) {
  const int n = g.vertex_count();
  if (d < 1) throw CohomError("dimension must be >= 1");
  if (static_cast<int>(rep.size()) != n)
    throw CohomError("representation must assign a vector to every vertex");
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(rep[v].entries.size()) != d)
      throw CohomError("representation vector dimension mismatch at vertex " + std::to_string(v));
    if (rep[v].scale2 <= 0) throw CohomError("representation scale must be positive");
    bool zero = true;
    for (const auto& e : rep[v].entries) zero = zero && e.is_zero();
    if (zero) throw CohomError("zero representation vector at vertex " + std::to_string(v));
  }
  for (const Edge& e : g.edges())
    if (!raw_inner(rep[e.first].entries, rep[e.second].entries).is_zero())
      throw CohomError("representation violates adjacency orthogonality at edge " +
                       pair_str(e.first, e.second));
  std::vector<char> used(n, 0);
  for (const auto& c : cliques) {
    if (static_cast<int>(c.size()) != d) throw CohomError("clique of the wrong size");
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a] < 0 || c[a] >= n) throw CohomError("clique vertex out of range");
      if (used[c[a]]) throw CohomError("cliques overlap at vertex " + std::to_string(c[a]));
      used[c[a]] = 1;
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (!g.adjacent(c[a], c[b]))
          throw CohomError("clique is not complete at pair " + pair_str(c[a], c[b]));
    }
  }
  const int m = static_cast<int>(cliques.size());
  if (m == 0) throw CohomError("need at least one clique");

  KrausWitness w;
  w.source = AElement(empty_graph(m * d), 1);
  w.target = AElement(g, d);
  for (int c = 0; c < m; ++c)
    for (int k = 0; k < d; ++k) {
      const int i = c * d + k;
      const int vtx = cliques[c][k];
      Matrix e(n * d, m * d);
      for (int r = 0; r < d; ++r) e.at(vtx * d + r, i) = rep[vtx].entries[r];
      Rational raw_norm2(0);
      for (const auto& x : rep[vtx].entries) raw_norm2 += x.norm2();
      w.operators.push_back(ScaledMatrix{std::move(e), Rational(1) / raw_norm2});
    }
  return w;
}

}  // namespace zest
