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

#include "zest/parameters.hpp"

#include <algorithm>
#include <cmath>

#include "zest/simplex.hpp"

namespace zest {

int independence_number(const Graph& g, int vertex_guard) {
  if (g.vertex_count() > vertex_guard)
    throw ParamError("independence number: vertex count exceeds guard");
  return clique_number(complement(g));
}

CapacityLb shannon_capacity_lb(const Graph& g, int n, int power_vertex_guard) {
  if (n < 1) throw ParamError("capacity power must be >= 1");
  if (g.vertex_count() == 0) throw ParamError("capacity of the empty graph");
  double size = 1;
  for (int k = 0; k < n; ++k) size *= g.vertex_count();
  if (size > power_vertex_guard)
    throw ParamError("strong power vertex count exceeds guard");
  Graph power = g;
  for (int k = 1; k < n; ++k) power = strong_product(power, g);
  const int alpha = independence_number(power, power_vertex_guard);
  CapacityLb out;
  out.power = n;
  out.alpha = alpha;
  out.value = std::pow(static_cast<double>(alpha), 1.0 / n);
  return out;
}

FccResult clique_cover_fractional(const Graph& g, std::size_t clique_guard) {
  FccResult out;
  out.cliques = maximal_cliques(g, clique_guard);
  const int n = g.vertex_count();
  const int nc = static_cast<int>(out.cliques.size());
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(nc, Rational(0)));
  for (int c = 0; c < nc; ++c)
    for (int v : out.cliques[c]) A[v][c] = 1;
  std::vector<Rational> b(n, Rational(1)), cost(nc, Rational(1));
  LpSolution lp = simplex_min_ge(A, b, cost);
  if (!lp.feasible || !lp.bounded)
    throw ParamError("clique cover LP did not solve");  // cannot happen: singletons cover
  out.value = lp.objective;
  out.weights = std::move(lp.x);
  out.dual = std::move(lp.dual);
  return out;
}

GaussianRational raw_inner(const std::vector<GaussianRational>& a,
                           const std::vector<GaussianRational>& b) {
  if (a.size() != b.size()) throw ValueError("inner product length mismatch");
  GaussianRational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].conj() * b[i];
  return s;
}

namespace {

bool support_overlaps(const std::vector<GaussianRational>& a,
                      const std::vector<GaussianRational>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) return true;
  return false;
}

CertCheck fail(std::string reason) {
  CertCheck c;
  c.ok = false;
  c.reason = std::move(reason);
  return c;
}

}  // namespace

CertCheck verify_orthonormal_rep(const Graph& g, const OrthonormalRepCertificate& cert) {
  const int n = g.vertex_count();
  if (n == 0) return fail("empty graph");
  if (static_cast<int>(cert.vectors.size()) != n)
    return fail("vector count does not match vertex count");
  if (cert.handle.empty()) return fail("missing handle");
  const std::size_t dim = cert.vectors[0].entries.size();
  for (int v = 0; v < n; ++v) {
    const ScaledVector& u = cert.vectors[v];
    if (u.entries.size() != dim) return fail("vector dimension mismatch at vertex " + std::to_string(v));
    if (u.scale2 <= 0) return fail("nonpositive scale at vertex " + std::to_string(v));
    if (u.norm2().is_zero()) return fail("zero vector at vertex " + std::to_string(v));
  }
  for (std::size_t k = 0; k < cert.handle.size(); ++k) {
    const ScaledVector& p = cert.handle[k];
    if (p.entries.size() != dim) return fail("handle part dimension mismatch");
    if (p.scale2 <= 0) return fail("nonpositive handle scale");
    if (p.norm2().is_zero()) return fail("zero handle part");
    for (std::size_t l = 0; l < k; ++l)
      if (support_overlaps(p.entries, cert.handle[l].entries))
        return fail("handle parts must have disjoint supports");
  }
  // Orthogonality on distinct non-adjacent pairs.
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      if (!raw_inner(cert.vectors[u].entries, cert.vectors[v].entries).is_zero())
        return fail("vectors of non-adjacent vertices " + std::to_string(u) + "," +
                    std::to_string(v) + " are not orthogonal");
    }
  Rational c_norm2(0);
  for (const auto& p : cert.handle) c_norm2 += p.norm2();
  Rational best(0);
  for (int v = 0; v < n; ++v) {
    const ScaledVector& u = cert.vectors[v];
    // With disjoint part supports, <c,u> = sum_k sqrt(s_k) <p_k, u_raw>; for
    // |<c,u>|^2 to be rational the vector may meet at most one part.
    int hit = -1;
    for (std::size_t k = 0; k < cert.handle.size(); ++k) {
      if (!support_overlaps(cert.handle[k].entries, u.entries)) continue;
      if (hit >= 0)
        return fail("vector at vertex " + std::to_string(v) +
                    " straddles differently scaled handle parts");
      hit = static_cast<int>(k);
    }
    if (hit < 0)
      return fail("handle orthogonal to vector at vertex " + std::to_string(v));
    const ScaledVector& part = cert.handle[hit];
    GaussianRational ip = raw_inner(part.entries, u.entries);
    if (ip.is_zero())
      return fail("handle orthogonal to vector at vertex " + std::to_string(v));
    Rational ip2 = ip.norm2() * part.scale2 * u.scale2;
    Rational val = c_norm2 * u.norm2() / ip2;
    if (val > best) best = val;
  }
  CertCheck ok;
  ok.ok = true;
  ok.value = best;
  return ok;
}

int rank_fp(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  auto inv_mod = [&](std::uint64_t a) {
    // Fermat inverse; p is prime.
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  std::size_t col = 0;
  for (; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (rows[i][col] % p != 0) {
        piv = static_cast<int>(i);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const std::uint64_t inv = inv_mod(rows[rank][col]);
    for (std::size_t j = col; j < cols; ++j)
      rows[rank][j] = static_cast<std::uint32_t>(rows[rank][j] * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == rank) continue;
      const std::uint64_t f = rows[i][col] % p;
      if (!f) continue;
      for (std::size_t j = col; j < cols; ++j)
        rows[i][j] = static_cast<std::uint32_t>(
            (rows[i][j] + (p - f % p) * rows[rank][j]) % p);
    }
    ++rank;
  }
  return rank;
}

CertCheck verify_subspace_rep_fp(const Graph& g, const SubspaceRepFp& rep) {
  const int n = g.vertex_count();
  if (n == 0) return fail("empty graph");
  if (!is_prime(static_cast<int>(rep.p))) return fail("p is not prime");
  if (rep.b < 1 || rep.a < rep.b) return fail("need a >= b >= 1");
  if (static_cast<int>(rep.spans.size()) != n) return fail("span count does not match vertex count");
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(rep.spans[v].size()) != rep.b)
      return fail("vertex " + std::to_string(v) + " span is not b rows");
    for (const auto& row : rep.spans[v]) {
      if (static_cast<int>(row.size()) != rep.a)
        return fail("vertex " + std::to_string(v) + " row length is not a");
      for (auto x : row)
        if (x >= rep.p) return fail("entry not reduced mod p");
    }
    if (rank_fp(rep.spans[v], rep.p) != rep.b)
      return fail("span at vertex " + std::to_string(v) + " has rank below b");
  }
  for (int v = 0; v < n; ++v) {
    std::vector<std::vector<std::uint32_t>> others;
    for (int u = 0; u < n; ++u) {
      if (u == v || g.adjacent(u, v)) continue;
      others.insert(others.end(), rep.spans[u].begin(), rep.spans[u].end());
    }
    const int r_others = rank_fp(others, rep.p);
    std::vector<std::vector<std::uint32_t>> joint = rep.spans[v];
    joint.insert(joint.end(), others.begin(), others.end());
    if (rank_fp(joint, rep.p) != rep.b + r_others)
      return fail("span at vertex " + std::to_string(v) +
                  " meets the span of its non-neighbors");
  }
  CertCheck ok;
  ok.ok = true;
  ok.value = Rational(rep.a, rep.b);
  return ok;
}

namespace {

int rank_c(const std::vector<std::vector<GaussianRational>>& rows, int width) {
  SubspaceBasis basis(static_cast<std::size_t>(width));
  for (const auto& row : rows) {
    SparseVec v;
    for (int j = 0; j < width; ++j)
      if (!row[j].is_zero()) v.emplace_back(static_cast<std::uint32_t>(j), row[j]);
    basis.insert(std::move(v));
  }
  return static_cast<int>(basis.rank());
}

}  // namespace

CertCheck verify_subspace_rep_c(const Graph& g, const SubspaceRepC& rep) {
  const int n = g.vertex_count();
  if (n == 0) return fail("empty graph");
  if (rep.b < 1 || rep.a < rep.b) return fail("need a >= b >= 1");
  if (static_cast<int>(rep.spans.size()) != n) return fail("span count does not match vertex count");
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(rep.spans[v].size()) != rep.b)
      return fail("vertex " + std::to_string(v) + " span is not b rows");
    for (const auto& row : rep.spans[v])
      if (static_cast<int>(row.size()) != rep.a)
        return fail("vertex " + std::to_string(v) + " row length is not a");
    if (rank_c(rep.spans[v], rep.a) != rep.b)
      return fail("span at vertex " + std::to_string(v) + " has rank below b");
  }
  for (int v = 0; v < n; ++v) {
    std::vector<std::vector<GaussianRational>> others;
    for (int u = 0; u < n; ++u) {
      if (u == v || g.adjacent(u, v)) continue;
      others.insert(others.end(), rep.spans[u].begin(), rep.spans[u].end());
    }
    const int r_others = rank_c(others, rep.a);
    std::vector<std::vector<GaussianRational>> joint = rep.spans[v];
    joint.insert(joint.end(), others.begin(), others.end());
    if (rank_c(joint, rep.a) != rep.b + r_others)
      return fail("span at vertex " + std::to_string(v) +
                  " meets the span of its non-neighbors");
  }
  CertCheck ok;
  ok.ok = true;
  ok.value = Rational(rep.a, rep.b);
  return ok;
}

CertCheck verify_projective_rep(const Graph& x, const ProjectiveRep& rep) {
  const int n = x.vertex_count();
  if (n == 0) return fail("empty graph");
  if (rep.b < 1 || rep.a < rep.b) return fail("need a >= b >= 1");
  if (static_cast<int>(rep.projections.size()) != n)
    return fail("projection count does not match vertex count");
  for (int v = 0; v < n; ++v) {
    const Matrix& p = rep.projections[v];
    if (p.rows() != rep.a || p.cols() != rep.a)
      return fail("projection at vertex " + std::to_string(v) + " is not a x a");
    if (p.adjoint() != p)
      return fail("projection at vertex " + std::to_string(v) + " is not self-adjoint");
    if (p * p != p)
      return fail("projection at vertex " + std::to_string(v) + " is not idempotent");
    if (p.rank() != rep.b)
      return fail("projection at vertex " + std::to_string(v) + " has rank != b");
  }
  for (auto [u, v] : x.edges())
    if (!(rep.projections[u] * rep.projections[v]).is_zero())
      return fail("projections of adjacent vertices " + std::to_string(u) + "," +
                  std::to_string(v) + " do not annihilate");
  CertCheck ok;
  ok.ok = true;
  ok.value = Rational(rep.a, rep.b);
  return ok;
}

}  // namespace zest
