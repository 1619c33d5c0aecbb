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

#include "zest/json_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <utility>
#include <vector>

namespace zest {
namespace {

const Json& require_field(const Json& j, const std::string& field) {
  if (!j.is_object()) throw JsonError("expected an object with field \"" + field + "\"");
  auto it = j.find(field);
  if (it == j.end()) throw JsonError("missing field \"" + field + "\"");
  return *it;
}

int int_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer())
    throw JsonError("field \"" + field + "\" must be an integer");
  const std::int64_t v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw JsonError("field \"" + field + "\" out of range");
  return static_cast<int>(v);
}

Json gaussian_to_json(const GaussianRational& z) {
  return Json::array({integer_to_json(numerator(z.re)), integer_to_json(denominator(z.re)),
                      integer_to_json(numerator(z.im)), integer_to_json(denominator(z.im))});
}

GaussianRational gaussian_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 4)
    throw JsonError("field \"" + field +
                    "\" entries must be [re_num, re_den, im_num, im_den] quadruples");
  const Integer re_num = integer_from_json(j[0], field);
  const Integer re_den = integer_from_json(j[1], field);
  const Integer im_num = integer_from_json(j[2], field);
  const Integer im_den = integer_from_json(j[3], field);
  if (re_den.is_zero() || im_den.is_zero())
    throw JsonError("field \"" + field + "\" has an entry with zero denominator");
  return GaussianRational(Rational(re_num, re_den), Rational(im_num, im_den));
}

std::vector<GaussianRational> gaussian_row_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw JsonError("field \"" + field + "\" must be an array");
  std::vector<GaussianRational> row;
  row.reserve(j.size());
  for (const Json& e : j) row.push_back(gaussian_from_json(e, field));
  return row;
}

Json gaussian_row_to_json(const std::vector<GaussianRational>& row) {
  Json out = Json::array();
  for (const GaussianRational& z : row) out.push_back(gaussian_to_json(z));
  return out;
}

}  // namespace

std::string float_string(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

Json integer_to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max())
    return Json(n.convert_to<std::int64_t>());
  return Json(n.str());
}

Integer integer_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw JsonError("field \"" + field + "\" is not a valid integer literal");
    }
  }
  throw JsonError("field \"" + field + "\" must be an integer or a decimal string");
}

Json rational_to_json(const Rational& q) { return Json(rational_string(q)); }

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer() || j.is_number_unsigned() || j.is_string()) {
    if (!j.is_string()) return Rational(integer_from_json(j, field));
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw JsonError("field \"" + field + "\" is not a valid rational literal");
    }
  }
  throw JsonError("field \"" + field + "\" must be a \"num/den\" string or an integer");
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.first, e.second}));
  return Json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const int n = int_from_json(require_field(j, "vertices"), "vertices");
  if (n < 0) throw JsonError("field \"vertices\" must be nonnegative");
  const Json& ej = require_field(j, "edges");
  if (!ej.is_array()) throw JsonError("field \"edges\" must be an array");
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const Json& e : ej) {
    if (!e.is_array() || e.size() != 2)
      throw JsonError("field \"edges\" entries must be [i, j] pairs");
    int u = int_from_json(e[0], "edges");
    int v = int_from_json(e[1], "edges");
    if (u == v) throw JsonError("field \"edges\" contains a loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw JsonError("field \"edges\" has an out-of-range endpoint");
    if (!seen.insert({u, v}).second)
      throw JsonError("field \"edges\" contains a duplicate edge");
    edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k) entries.push_back(gaussian_to_json(m.at(i, k)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
  const int rows = int_from_json(require_field(j, "rows"), "rows");
  const int cols = int_from_json(require_field(j, "cols"), "cols");
  if (rows < 0 || cols < 0) throw JsonError("matrix dimensions must be nonnegative");
  const Json& ej = require_field(j, "entries");
  if (!ej.is_array() || ej.size() != std::size_t(rows) * std::size_t(cols))
    throw JsonError("field \"entries\" must hold rows*cols quadruples (row-major)");
  Matrix m(rows, cols);
  std::size_t pos = 0;
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m.at(i, k) = gaussian_from_json(ej[pos++], "entries");
  return m;
}

Json scaled_matrix_to_json(const ScaledMatrix& m) {
  return Json{{"matrix", matrix_to_json(m.matrix)}, {"scale2", rational_to_json(m.scale2)}};
}

ScaledMatrix scaled_matrix_from_json(const Json& j) {
  ScaledMatrix out;
  out.matrix = matrix_from_json(require_field(j, "matrix"));
  out.scale2 = rational_from_json(require_field(j, "scale2"), "scale2");
  if (out.scale2 <= 0) throw JsonError("field \"scale2\" must be positive");
  return out;
}

Json ncgraph_to_json(const NcGraph& s) {
  Json basis = Json::array();
  for (const Matrix& b : s.basis()) basis.push_back(matrix_to_json(b));
  return Json{{"ambient_dim", s.ambient_dim()}, {"basis", std::move(basis)}};
}

NcGraph ncgraph_from_json(const Json& j) {
  const int ambient = int_from_json(require_field(j, "ambient_dim"), "ambient_dim");
  const Json& bj = require_field(j, "basis");
  if (!bj.is_array()) throw JsonError("field \"basis\" must be an array of matrices");
  std::vector<Matrix> basis;
  basis.reserve(bj.size());
  for (const Json& b : bj) basis.push_back(matrix_from_json(b));
  try {
    return NcGraph(ambient, std::move(basis));
  } catch (const std::exception& e) {
    throw JsonError(std::string("invalid noncommutative graph: ") + e.what());
  }
}

Json aelement_to_json(const AElement& a) {
  Json terms = Json::array();
  for (const Term& t : a.terms())
    terms.push_back(Json{{"graph", graph_to_json(t.graph)}, {"dim", t.dim}});
  return Json{{"terms", std::move(terms)}};
}

AElement aelement_from_json(const Json& j) {
  const Json& tj = require_field(j, "terms");
  if (!tj.is_array()) throw JsonError("field \"terms\" must be an array");
  std::vector<Term> terms;
  for (const Json& t : tj) {
    Term term;
    term.graph = graph_from_json(require_field(t, "graph"));
    term.dim = int_from_json(require_field(t, "dim"), "dim");
    terms.push_back(std::move(term));
  }
  try {
    return AElement(std::move(terms));
  } catch (const std::exception& e) {
    throw JsonError(std::string("invalid element: ") + e.what());
  }
}

Json distribution_to_json(const Distribution& d) {
  Json weights = Json::array();
  for (const Rational& w : d.weights) weights.push_back(rational_to_json(w));
  return Json{{"weights", std::move(weights)}};
}

Distribution distribution_from_json(const Json& j) {
  const Json& wj = require_field(j, "weights");
  if (!wj.is_array()) throw JsonError("field \"weights\" must be an array");
  std::vector<Rational> weights;
  weights.reserve(wj.size());
  for (const Json& w : wj) weights.push_back(rational_from_json(w, "weights"));
  try {
    return Distribution(std::move(weights));
  } catch (const std::exception& e) {
    throw JsonError(std::string("invalid distribution: ") + e.what());
  }
}

Json scaled_vector_to_json(const ScaledVector& v) {
  return Json{{"entries", gaussian_row_to_json(v.entries)},
              {"scale2", rational_to_json(v.scale2)}};
}

ScaledVector scaled_vector_from_json(const Json& j) {
  ScaledVector out;
  out.entries = gaussian_row_from_json(require_field(j, "entries"), "entries");
  out.scale2 = rational_from_json(require_field(j, "scale2"), "scale2");
  if (out.scale2 <= 0) throw JsonError("field \"scale2\" must be positive");
  return out;
}

Json orthonormal_rep_to_json(const OrthonormalRepCertificate& c) {
  Json vectors = Json::array();
  for (const ScaledVector& v : c.vectors) vectors.push_back(scaled_vector_to_json(v));
  Json handle = Json::array();
  for (const ScaledVector& v : c.handle) handle.push_back(scaled_vector_to_json(v));
  return Json{{"vectors", std::move(vectors)}, {"handle", std::move(handle)}};
}

OrthonormalRepCertificate orthonormal_rep_from_json(const Json& j) {
  OrthonormalRepCertificate out;
  const Json& vj = require_field(j, "vectors");
  if (!vj.is_array()) throw JsonError("field \"vectors\" must be an array");
  for (const Json& v : vj) out.vectors.push_back(scaled_vector_from_json(v));
  const Json& hj = require_field(j, "handle");
  if (!hj.is_array()) throw JsonError("field \"handle\" must be an array");
  for (const Json& v : hj) out.handle.push_back(scaled_vector_from_json(v));
  return out;
}

Json subspace_rep_fp_to_json(const SubspaceRepFp& r) {
  Json spans = Json::array();
  for (const auto& span : r.spans) {
    Json rows = Json::array();
    for (const auto& row : span) {
      Json cells = Json::array();
      for (std::uint32_t x : row) cells.push_back(x);
      rows.push_back(std::move(cells));
    }
    spans.push_back(std::move(rows));
  }
  return Json{{"p", r.p}, {"a", r.a}, {"b", r.b}, {"subspaces", std::move(spans)}};
}

SubspaceRepFp subspace_rep_fp_from_json(const Json& j) {
  SubspaceRepFp out;
  const int p = int_from_json(require_field(j, "p"), "p");
  if (p < 2) throw JsonError("field \"p\" must be at least 2");
  out.p = static_cast<std::uint32_t>(p);
  out.a = int_from_json(require_field(j, "a"), "a");
  out.b = int_from_json(require_field(j, "b"), "b");
  const Json& sj = require_field(j, "subspaces");
  if (!sj.is_array()) throw JsonError("field \"subspaces\" must be an array");
  for (const Json& span : sj) {
    if (!span.is_array()) throw JsonError("field \"subspaces\" entries must be row lists");
    std::vector<std::vector<std::uint32_t>> rows;
    for (const Json& row : span) {
      if (!row.is_array()) throw JsonError("field \"subspaces\" rows must be arrays");
      std::vector<std::uint32_t> cells;
      for (const Json& x : row) {
        const int v = int_from_json(x, "subspaces");
        if (v < 0) throw JsonError("field \"subspaces\" entries must be nonnegative");
        cells.push_back(static_cast<std::uint32_t>(v));
      }
      rows.push_back(std::move(cells));
    }
    out.spans.push_back(std::move(rows));
  }
  return out;
}

Json subspace_rep_c_to_json(const SubspaceRepC& r) {
  Json spans = Json::array();
  for (const auto& span : r.spans) {
    Json rows = Json::array();
    for (const auto& row : span) rows.push_back(gaussian_row_to_json(row));
    spans.push_back(std::move(rows));
  }
  return Json{{"a", r.a}, {"b", r.b}, {"subspaces", std::move(spans)}};
}

SubspaceRepC subspace_rep_c_from_json(const Json& j) {
  SubspaceRepC out;
  out.a = int_from_json(require_field(j, "a"), "a");
  out.b = int_from_json(require_field(j, "b"), "b");
  const Json& sj = require_field(j, "subspaces");
  if (!sj.is_array()) throw JsonError("field \"subspaces\" must be an array");
  for (const Json& span : sj) {
    if (!span.is_array()) throw JsonError("field \"subspaces\" entries must be row lists");
    std::vector<std::vector<GaussianRational>> rows;
    for (const Json& row : span) rows.push_back(gaussian_row_from_json(row, "subspaces"));
    out.spans.push_back(std::move(rows));
  }
  return out;
}

Json projective_rep_to_json(const ProjectiveRep& r) {
  Json projections = Json::array();
  for (const Matrix& m : r.projections) projections.push_back(matrix_to_json(m));
  return Json{{"a", r.a}, {"b", r.b}, {"projections", std::move(projections)}};
}

ProjectiveRep projective_rep_from_json(const Json& j) {
  ProjectiveRep out;
  out.a = int_from_json(require_field(j, "a"), "a");
  out.b = int_from_json(require_field(j, "b"), "b");
  const Json& pj = require_field(j, "projections");
  if (!pj.is_array()) throw JsonError("field \"projections\" must be an array");
  for (const Json& m : pj) out.projections.push_back(matrix_from_json(m));
  return out;
}

Json kraus_witness_to_json(const KrausWitness& w) {
  Json operators = Json::array();
  for (const ScaledMatrix& op : w.operators) operators.push_back(scaled_matrix_to_json(op));
  return Json{{"source", aelement_to_json(w.source)},
              {"target", aelement_to_json(w.target)},
              {"mode", w.floating ? "floating" : "exact"},
              {"tol", w.tol},
              {"operators", std::move(operators)}};
}

KrausWitness kraus_witness_from_json(const Json& j) {
  KrausWitness out;
  out.source = aelement_from_json(require_field(j, "source"));
  out.target = aelement_from_json(require_field(j, "target"));
  const Json& mj = require_field(j, "mode");
  if (!mj.is_string()) throw JsonError("field \"mode\" must be \"exact\" or \"floating\"");
  const std::string mode = mj.get<std::string>();
  if (mode == "exact") {
    out.floating = false;
  } else if (mode == "floating") {
    out.floating = true;
  } else {
    throw JsonError("field \"mode\" must be \"exact\" or \"floating\"");
  }
  if (j.contains("tol")) {
    const Json& tj = j["tol"];
    if (!tj.is_number()) throw JsonError("field \"tol\" must be a number");
    out.tol = tj.get<double>();
    if (!(out.tol > 0)) throw JsonError("field \"tol\" must be positive");
  }
  const Json& oj = require_field(j, "operators");
  if (!oj.is_array()) throw JsonError("field \"operators\" must be an array");
  for (const Json& op : oj) out.operators.push_back(scaled_matrix_from_json(op));
  return out;
}

Json special_form_to_json(const SpecialForm& f) {
  Json isometries = Json::array();
  for (const ScaledMatrix& u : f.isometries) isometries.push_back(scaled_matrix_to_json(u));
  return Json{{"phi", f.phi}, {"isometries", std::move(isometries)}};
}

SpecialForm special_form_from_json(const Json& j) {
  SpecialForm out;
  const Json& pj = require_field(j, "phi");
  if (!pj.is_array()) throw JsonError("field \"phi\" must be an array of vertex indices");
  for (const Json& v : pj) out.phi.push_back(int_from_json(v, "phi"));
  const Json& ij = require_field(j, "isometries");
  if (!ij.is_array()) throw JsonError("field \"isometries\" must be an array");
  for (const Json& u : ij) out.isometries.push_back(scaled_matrix_from_json(u));
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    throw JsonError(path + ": " + e.what());
  }
}

}  // namespace zest
