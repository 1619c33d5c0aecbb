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

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "zest/parameters.hpp"

namespace zest {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Largest step t in (0,1] keeping A + t*B positive definite, found by
// Cholesky tests with 0.8 backtracking, then shrunk by the usual 0.95
// safety factor. Returns 0 when even a tiny step fails. Non-finite
// directions are rejected outright: LLT cannot be trusted to flag NaN.
double psd_step(const MatrixXd& a, const MatrixXd& b) {
  if (!b.allFinite()) return 0.0;
  double t = 1.0;
  while (t > 1e-13) {
    MatrixXd trial = a + t * b;
    Eigen::LLT<MatrixXd> llt(trial);
    if (llt.info() == Eigen::Success) return 0.95 * t;
    t *= 0.8;
  }
  return 0.0;
}

}  // namespace

ThetaResult lovasz_theta(const Graph& g, double tol, int max_iterations, int vertex_guard) {
  const int n = g.vertex_count();
  if (n < 1) throw ThetaError("theta needs a nonempty graph");
  if (n > vertex_guard) throw ThetaError("theta: vertex count exceeds guard");
  if (tol <= 0) throw ThetaError("theta: tolerance must be positive");
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size()) + 1;  // edge constraints + trace

  const MatrixXd eye = MatrixXd::Identity(n, n);
  const MatrixXd ones = MatrixXd::Ones(n, n);
  auto a_star = [&](const VectorXd& w) {
    MatrixXd z = w(m - 1) * eye;
    for (int k = 0; k + 1 < m; ++k) {
      auto [i, j] = edges[k];
      z(i, j) += w(k);
      z(j, i) += w(k);
    }
    return z;
  };

  MatrixXd x = eye / n;
  VectorXd y = VectorXd::Zero(m);
  y(m - 1) = n + 1;
  MatrixXd z = a_star(y) - ones;

  ThetaResult res;
  double phi = y(m - 1), psi = x.sum();
  for (int iter = 0; iter < max_iterations; ++iter) {
    res.iterations = iter;
    res.gap = phi - psi;
    if (res.gap <= tol) {
      res.value = 0.5 * (phi + psi);
      res.upper = phi;
      res.lower = psi;
      res.primal.assign(x.data(), x.data() + n * n);
      res.dual_y.assign(y.data(), y.data() + m);
      return res;
    }

    const double mu = z.cwiseProduct(x).sum() / (2.0 * n);
    // Z is kept strictly positive definite by the step search, but near the
    // optimum its Cholesky can still break down in floating point; retry
    // with escalating diagonal jitter before giving up.
    Eigen::LLT<MatrixXd> zllt(z);
    for (double jitter = 1e-14 * (1.0 + z.diagonal().maxCoeff());
         zllt.info() != Eigen::Success && jitter < 1.0; jitter *= 10.0)
      zllt.compute(z + jitter * eye);
    if (zllt.info() != Eigen::Success) break;  // stalled
    MatrixXd zi = zllt.solve(eye);
    zi = 0.5 * (zi + zi.transpose()).eval();
    if (!zi.allFinite()) break;  // stalled

    VectorXd rhs(m);
    for (int k = 0; k + 1 < m; ++k) rhs(k) = 2.0 * mu * zi(edges[k].first, edges[k].second);
    rhs(m - 1) = mu * zi.trace() - 1.0;

    MatrixXd big(m, m);
    for (int l = 0; l < m; ++l) {
      MatrixXd t;
      if (l + 1 < m) {
        auto [i, j] = edges[l];
        t = zi.col(i) * x.row(j) + zi.col(j) * x.row(i);
      } else {
        t = zi * x;
      }
      for (int k = 0; k + 1 < m; ++k) big(k, l) = t(edges[k].first, edges[k].second) +
                                                  t(edges[k].second, edges[k].first);
      big(m - 1, l) = t.trace();
    }
    // Rank-revealing QR: the Schur complement turns nearly singular close to
    // the optimum, where partial-pivot LU can divide by a zero pivot.
    VectorXd dy = big.colPivHouseholderQr().solve(rhs);
    if (!dy.allFinite()) break;  // stalled
    MatrixXd dz = a_star(dy);
    MatrixXd dx = mu * zi - x - zi * dz * x;
    dx = 0.5 * (dx + dx.transpose()).eval();

    const double alpha = psd_step(x, dx);
    const double beta = psd_step(z, dz);
    if (alpha <= 0 && beta <= 0) break;  // stalled
    if (alpha > 0) x += alpha * dx;
    if (beta > 0) {
      y += beta * dy;
      z = a_star(y) - ones;
    }
    phi = y(m - 1);
    psi = x.sum();
  }
  throw ThetaError("theta did not converge: achieved duality gap " +
                   std::to_string(phi - psi) + " > tol " + std::to_string(tol));
}

}  // namespace zest
