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

#ifndef ZEST_PARAMETERS_HPP_
#define ZEST_PARAMETERS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "zest/cliques.hpp"
#include "zest/exact_matrix.hpp"
#include "zest/graph.hpp"
#include "zest/rational.hpp"

namespace zest {

struct ParamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ThetaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact independence number via branch and bound (maximum clique of the
// complement with a greedy coloring bound).
int independence_number(const Graph& g, int vertex_guard = defaults::kAlphaVertexGuard);

struct CapacityLb {
  int power;        // n
  long long alpha;  // alpha(G^boxtimes n), exact
  double value;     // alpha^(1/n)
};
// Shannon capacity lower bound alpha(G^boxtimes n)^(1/n); the power graph's
// vertex count |V(G)|^n must stay within the guard.
CapacityLb shannon_capacity_lb(const Graph& g, int n,
                               int power_vertex_guard = defaults::kAlphaVertexGuard);

struct FccResult {
  Rational value;                        // fractional clique cover number
  std::vector<std::vector<int>> cliques;  // maximal cliques, solver order
  std::vector<Rational> weights;          // primal clique weights
  std::vector<Rational> dual;             // fractional clique packing per vertex
};
// Exact fractional clique cover number: covering LP over the maximal cliques
// solved with the exact rational simplex.
FccResult clique_cover_fractional(const Graph& g,
                                  std::size_t clique_guard = defaults::kCliqueCountGuard);

struct ThetaResult {
  double value = 0;  // midpoint of the final primal/dual objectives
  double upper = 0;  // dual objective, valid upper bound at convergence
  double lower = 0;  // primal objective
  double gap = 0;
  int iterations = 0;
  std::vector<double> primal;  // X row-major, the primal certificate
  std::vector<double> dual_y;  // edge multipliers then the trace multiplier
};
// Lovasz theta of g: max <J,X> over unit-trace PSD X with X_ij = 0 on edges,
// solved by a primal-dual interior-point method. Deterministic: X starts at
// I/n, no randomness. Throws ThetaError if the duality gap does not reach tol
// within the iteration cap (the message reports the achieved gap).
ThetaResult lovasz_theta(const Graph& g, double tol = 1e-8, int max_iterations = 500,
                         int vertex_guard = defaults::kThetaVertexGuard);

// ---------------------------------------------------------------------------
// Certificates. Vectors are held unnormalized as sqrt(scale2) * entries with
// rational scale2 > 0, so squared norms and squared inner products stay
// rational even when the normalized vectors are irrational.

struct ScaledVector {
  std::vector<GaussianRational> entries;
  Rational scale2 = 1;

  Rational norm2() const {
    Rational s(0);
    for (const auto& e : entries) s += e.norm2();
    return s * scale2;
  }
};

// <a,b> on the raw entries (conjugate-linear in the first slot), scales not
// applied.
GaussianRational raw_inner(const std::vector<GaussianRational>& a,
                           const std::vector<GaussianRational>& b);

// Orthonormal representation with handle: vectors u_g with u_g orthogonal to
// u_g' for distinct non-adjacent g, g', plus a handle c. The handle is a sum
// of parts with pairwise disjoint supports; parts may carry different scales
// (needed for exactness of transported handles). Certified value:
// max_g ||c||^2 ||u_g||^2 / |<c,u_g>|^2, an upper bound on theta(G).
struct OrthonormalRepCertificate {
  std::vector<ScaledVector> vectors;
  std::vector<ScaledVector> handle;
};

// Subspace representation over F_p: per-vertex b-dimensional subspaces of
// F_p^a, spanned by the given rows, with S_g intersecting the span of the
// subspaces of its distinct non-neighbors trivially. Certified value a/b, an
// upper bound on the Haemers-type bound for G.
struct SubspaceRepFp {
  std::uint32_t p = 0;
  int a = 0, b = 0;
  // spans[g]: b rows of a entries, values in [0, p).
  std::vector<std::vector<std::vector<std::uint32_t>>> spans;
};

// Same shape over Q(i).
struct SubspaceRepC {
  int a = 0, b = 0;
  std::vector<std::vector<std::vector<GaussianRational>>> spans;
};

// Projective representation of a graph X: rank-b orthogonal projections P_g
// on C^a with P_u P_v = 0 for every edge uv of X. Certified value a/b.
struct ProjectiveRep {
  int a = 0, b = 0;
  std::vector<Matrix> projections;
};

struct CertCheck {
  bool ok = false;
  Rational value;     // meaningful when ok
  std::string reason;  // failure detail when !ok
};

CertCheck verify_orthonormal_rep(const Graph& g, const OrthonormalRepCertificate& cert);
CertCheck verify_subspace_rep_fp(const Graph& g, const SubspaceRepFp& rep);
CertCheck verify_subspace_rep_c(const Graph& g, const SubspaceRepC& rep);
// Checks a projective representation of x itself (callers pass the
// complement when certifying complement parameters).
CertCheck verify_projective_rep(const Graph& x, const ProjectiveRep& rep);

// Rank of a matrix over F_p given as rows; p must be an odd prime or 2.
int rank_fp(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

}  // namespace zest

#endif  // ZEST_PARAMETERS_HPP_
