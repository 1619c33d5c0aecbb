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

#include "zest/certificates.hpp"

#include <numeric>
#include <string>

namespace zest {

namespace {

// Shared validation: the form must be a verified unit-vector special form for
// (H, 1) <= target, and there must be one input representation per term.
void check_input(const TransportInput& in, std::size_t reps) {
  if (in.h.vertex_count() == 0) throw TransportError("transport needs a nonempty graph");
  if (in.target.is_zero()) throw TransportError("transport target is zero");
  WitnessCheck chk = verify_special_form(AElement(in.h, 1), in.target, in.form);
  if (!chk.ok) throw TransportError("special form invalid: " + chk.reason);
  if (reps != in.target.terms().size())
    throw TransportError("need one input representation per target term");
}

// Unit column of the form at vertex h, raw entries (the scale is determined
// by the isometry condition: scale2 = 1 / ||raw||^2).
std::vector<GaussianRational> unit_column(const SpecialForm& form, int h) {
  const Matrix& m = form.isometries[h].matrix;
  std::vector<GaussianRational> u(m.rows());
  for (int i = 0; i < m.rows(); ++i) u[i] = m.at(i, 0);
  return u;
}

Rational raw_norm2(const std::vector<GaussianRational>& v) {
  Rational s(0);
  for (const auto& e : v) s += e.norm2();
  return s;
}

}  // namespace

Graph classical_realization(const AElement& t) {
  Graph acc(0, std::vector<Edge>{});
  for (const Term& term : t.terms())
    acc = disjoint_union(acc, strong_product(term.graph, empty_graph(term.dim)));
  return acc;
}

TransportInput special_form_classical(const AElement& t, const AElement& s,
                                      const SpecialForm& form) {
  WitnessCheck chk = verify_special_form(t, s, form);
  if (!chk.ok) throw TransportError("special form invalid: " + chk.reason);
  TransportInput out;
  out.target = s;
  out.h = classical_realization(t);
  for (int h = 0; h < t.total_vertices(); ++h) {
    const int d = t.terms()[t.term_of_vertex(h)].dim;
    const ScaledMatrix& u = form.isometries[h];
    for (int k = 0; k < d; ++k) {
      out.form.phi.push_back(form.phi[h]);
      Matrix col(u.matrix.rows(), 1);
      for (int r = 0; r < u.matrix.rows(); ++r) col.at(r, 0) = u.matrix.at(r, k);
      out.form.isometries.push_back(ScaledMatrix{std::move(col), u.scale2});
    }
  }
  WitnessCheck unit = verify_special_form(AElement(out.h, 1), s, out.form);
  if (!unit.ok) throw TransportError("derived unit form invalid: " + unit.reason);
  return out;
}

ThetaTransport transport_theta(const TransportInput& in,
                               const std::vector<OrthonormalRepCertificate>& reps) {
  check_input(in, reps.size());
  const auto& terms = in.target.terms();
  const std::size_t r = terms.size();

  std::vector<Rational> value(r), handle_norm2(r);
  std::vector<int> rep_dim(r), offset(r);
  int total = 0;
  for (std::size_t t = 0; t < r; ++t) {
    CertCheck chk = verify_orthonormal_rep(terms[t].graph, reps[t]);
    if (!chk.ok)
      throw TransportError("input representation for term " + std::to_string(t) +
                           " invalid: " + chk.reason);
    value[t] = chk.value;
    Rational n2(0);
    for (const auto& p : reps[t].handle) n2 += p.norm2();
    handle_norm2[t] = n2;
    rep_dim[t] = static_cast<int>(reps[t].vectors[0].entries.size());
    offset[t] = total;
    total += rep_dim[t] * terms[t].dim * terms[t].dim;
  }
  Rational bound(0);
  for (std::size_t t = 0; t < r; ++t) bound += value[t] * terms[t].dim;

  ThetaTransport out;
  out.input_bound = bound;
  for (int h = 0; h < in.h.vertex_count(); ++h) {
    const int g = in.form.phi[h];
    const std::size_t t = in.target.term_of_vertex(g);
    const int d = terms[t].dim;
    const int g_loc = g - in.target.vertex_offset(static_cast<int>(t));
    const ScaledVector& v = reps[t].vectors[g_loc];
    const std::vector<GaussianRational> u = unit_column(in.form, h);
    ScaledVector w;
    w.entries.assign(total, GaussianRational(0));
    for (int i = 0; i < rep_dim[t]; ++i) {
      if (v.entries[i].is_zero()) continue;
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          w.entries[offset[t] + (i * d + j) * d + k] = v.entries[i] * u[j] * u[k].conj();
    }
    w.scale2 = v.scale2 * in.form.isometries[h].scale2 * in.form.isometries[h].scale2;
    out.certificate.vectors.push_back(std::move(w));
  }
  // Handle: per input handle part p of term t, the part p (x) sum_i |ii> with
  // squared scale lambda_t * scale2(p) / (||handle_t||^2 * d).
  for (std::size_t t = 0; t < r; ++t) {
    const int d = terms[t].dim;
    const Rational lambda = value[t] * terms[t].dim / bound;
    for (const ScaledVector& p : reps[t].handle) {
      ScaledVector part;
      part.entries.assign(total, GaussianRational(0));
      for (std::size_t i = 0; i < p.entries.size(); ++i) {
        if (p.entries[i].is_zero()) continue;
        for (int j = 0; j < d; ++j)
          part.entries[offset[t] + (static_cast<int>(i) * d + j) * d + j] = p.entries[i];
      }
      part.scale2 = lambda * p.scale2 / (handle_norm2[t] * d);
      out.certificate.handle.push_back(std::move(part));
    }
  }
  CertCheck chk = verify_orthonormal_rep(in.h, out.certificate);
  if (!chk.ok) throw TransportError("transported representation invalid: " + chk.reason);
  out.value = chk.value;
  if (out.value > out.input_bound)
    throw TransportError("transported value exceeds the input bound");
  return out;
}

namespace {

// Least common multiple of the input denominators.
int common_denominator(const std::vector<int>& bs) {
  int l = 1;
  for (int b : bs) {
    if (b < 1) throw TransportError("representation denominator must be positive");
    l = std::lcm(l, b);
  }
  return l;
}

}  // namespace

HaemersTransport transport_haemers_c(const TransportInput& in,
                                     const std::vector<SubspaceRepC>& reps) {
  check_input(in, reps.size());
  const auto& terms = in.target.terms();
  const std::size_t r = terms.size();
  std::vector<int> bs;
  for (const auto& rep : reps) bs.push_back(rep.b);
  const int b = common_denominator(bs);

  // Pad to the common denominator: S_g (x) C^m has basis s_i (x) e_j.
  std::vector<SubspaceRepC> padded(r);
  std::vector<int> offset(r);
  int total = 0;
  Rational bound(0);
  for (std::size_t t = 0; t < r; ++t) {
    const int m = b / reps[t].b;
    SubspaceRepC& p = padded[t];
    p.a = reps[t].a * m;
    p.b = b;
    for (const auto& span : reps[t].spans) {
      std::vector<std::vector<GaussianRational>> rows;
      for (const auto& row : span)
        for (int j = 0; j < m; ++j) {
          std::vector<GaussianRational> padded_row(p.a);
          for (std::size_t i = 0; i < row.size(); ++i) padded_row[i * m + j] = row[i];
          rows.push_back(std::move(padded_row));
        }
      p.spans.push_back(std::move(rows));
    }
    CertCheck chk = verify_subspace_rep_c(terms[t].graph, p);
    if (!chk.ok)
      throw TransportError("input representation for term " + std::to_string(t) +
                           " invalid: " + chk.reason);
    offset[t] = total;
    total += p.a * terms[t].dim;
    bound += chk.value * terms[t].dim;
  }

  HaemersTransport out;
  out.input_bound = bound;
  out.certificate.a = total;
  out.certificate.b = b;
  for (int h = 0; h < in.h.vertex_count(); ++h) {
    const int g = in.form.phi[h];
    const std::size_t t = in.target.term_of_vertex(g);
    const int d = terms[t].dim;
    const int g_loc = g - in.target.vertex_offset(static_cast<int>(t));
    const std::vector<GaussianRational> u = unit_column(in.form, h);
    std::vector<std::vector<GaussianRational>> rows;
    for (const auto& s_row : padded[t].spans[g_loc]) {
      std::vector<GaussianRational> row(total);
      for (std::size_t i = 0; i < s_row.size(); ++i) {
        if (s_row[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) row[offset[t] + static_cast<int>(i) * d + j] = s_row[i] * u[j];
      }
      rows.push_back(std::move(row));
    }
    out.certificate.spans.push_back(std::move(rows));
  }
  CertCheck chk = verify_subspace_rep_c(in.h, out.certificate);
  if (!chk.ok) throw TransportError("transported representation invalid: " + chk.reason);
  out.value = chk.value;
  if (out.value > out.input_bound)
    throw TransportError("transported value exceeds the input bound");
  return out;
}

ProjectiveTransport transport_projective(const TransportInput& in,
                                         const std::vector<ProjectiveRep>& reps) {
  check_input(in, reps.size());
  const auto& terms = in.target.terms();
  const std::size_t r = terms.size();
  std::vector<int> bs;
  for (const auto& rep : reps) bs.push_back(rep.b);
  const int b = common_denominator(bs);

  std::vector<ProjectiveRep> padded(r);
  std::vector<int> offset(r);
  int total = 0;
  Rational bound(0);
  for (std::size_t t = 0; t < r; ++t) {
    const int m = b / reps[t].b;
    ProjectiveRep& p = padded[t];
    p.a = reps[t].a * m;
    p.b = b;
    for (const Matrix& proj : reps[t].projections) p.projections.push_back(proj.kron(Matrix::identity(m)));
    CertCheck chk = verify_projective_rep(complement(terms[t].graph), p);
    if (!chk.ok)
      throw TransportError("input representation for term " + std::to_string(t) +
                           " invalid: " + chk.reason);
    offset[t] = total;
    total += p.a * terms[t].dim;
    bound += chk.value * terms[t].dim;
  }

  ProjectiveTransport out;
  out.input_bound = bound;
  out.certificate.a = total;
  out.certificate.b = b;
  for (int h = 0; h < in.h.vertex_count(); ++h) {
    const int g = in.form.phi[h];
    const std::size_t t = in.target.term_of_vertex(g);
    const int d = terms[t].dim;
    const int g_loc = g - in.target.vertex_offset(static_cast<int>(t));
    const std::vector<GaussianRational> u = unit_column(in.form, h);
    const Rational n2 = raw_norm2(u);
    const Matrix& p = padded[t].projections[g_loc];
    Matrix q(total, total);
    for (int i = 0; i < p.rows(); ++i)
      for (int i2 = 0; i2 < p.cols(); ++i2) {
        if (p.at(i, i2).is_zero()) continue;
        for (int j = 0; j < d; ++j)
          for (int j2 = 0; j2 < d; ++j2) {
            GaussianRational e = u[j] * u[j2].conj();
            if (e.is_zero()) continue;
            q.at(offset[t] + i * d + j, offset[t] + i2 * d + j2) =
                p.at(i, i2) * e * GaussianRational(Rational(1) / n2);
          }
      }
    out.certificate.projections.push_back(std::move(q));
  }
  CertCheck chk = verify_projective_rep(complement(in.h), out.certificate);
  if (!chk.ok) throw TransportError("transported representation invalid: " + chk.reason);
  out.value = chk.value;
  if (out.value > out.input_bound)
    throw TransportError("transported value exceeds the input bound");
  return out;
}

}  // namespace zest
