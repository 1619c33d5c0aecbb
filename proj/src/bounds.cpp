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

#include "zest/bounds.hpp"

#include <string>
#include <vector>

#include "zest/graph.hpp"
#include "zest/parameters.hpp"

namespace zest {
namespace {

HighFloat high_from_integer(const Integer& n) { return HighFloat(n.str()); }

HighFloat high_from_rational(const Rational& q) {
  return high_from_integer(numerator(q)) / high_from_integer(denominator(q));
}

HighFloat log2_high(const HighFloat& x) {
  using boost::multiprecision::log2;
  return log2(x);
}

}  // namespace

Integer binomial_coefficient(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  // C(n, i+1) = C(n, i) * (n - i) / (i + 1); each division is exact.
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

HighFloat binary_entropy(const HighFloat& x) {
  if (x < 0 || x > 1) throw BoundsError("binary_entropy: argument outside [0, 1]");
  if (x == 0 || x == 1) return HighFloat(0);
  const HighFloat y = 1 - x;
  return -x * log2_high(x) - y * log2_high(y);
}

FpBoundReport fp_exponent_lower_bound(int p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw BoundsError("fp_exponent_lower_bound: p must be an odd prime");

  FpBoundReport report;
  report.p = p;
  const int n = 4 * p - 1;
  report.central_binomial = binomial_coefficient(n, 2 * p);
  if (report.central_binomial != binomial_coefficient(n, 2 * p - 1))
    throw BoundsError("fp_exponent_lower_bound: binomial symmetry self-check failed");
  Integer tail = 0;
  Integer running = 1;
  for (int i = 0; i < p; ++i) {
    tail += running;
    running = running * (n - i) / (i + 1);
  }
  report.tail_sum = tail;
  if (report.central_binomial <= 0 || report.tail_sum <= 0)
    throw BoundsError("fp_exponent_lower_bound: nonpositive ingredient");

  const HighFloat log_n = log2_high(HighFloat(n));
  report.binomial_form = (log2_high(high_from_integer(report.central_binomial)) -
                          log2_high(high_from_integer(report.tail_sum)) - log_n) /
                         log_n;

  const HighFloat half_shift = HighFloat(1) / 2 + HighFloat(1) / (8 * p - 2);
  const HighFloat quarter_shift = HighFloat(1) / 4 + HighFloat(1) / (16 * p - 4);
  const HighFloat gap = binary_entropy(half_shift) - binary_entropy(quarter_shift);
  report.entropy_form =
      (n * gap - log2_high(HighFloat(16) * p * p - 4 * p)) / log_n;
  if (report.binomial_form < report.entropy_form)
    throw BoundsError("fp_exponent_lower_bound: form ordering self-check failed");

  report.exceeds_one = report.binomial_form > 1;
  report.assumption = "assumes a Hadamard matrix of size " + std::to_string(4 * p) +
                      " exists (not verified here)";
  if (p == 17) report.assumption += "; size 68 follows from the Paley construction";
  return report;
}

HighFloat fcc_exponent_ratio(const Rational& chi_f_lb, int xi_complement_ub) {
  if (chi_f_lb <= 1) throw BoundsError("fcc_exponent_ratio: chi_f_lb must exceed 1");
  if (xi_complement_ub < 2)
    throw BoundsError("fcc_exponent_ratio: xi_complement_ub must be at least 2");
  return log2_high(high_from_rational(chi_f_lb)) /
         log2_high(HighFloat(xi_complement_ub));
}

OmegaFccReport omega_fcc_report(int k) {
  if (k != 1) throw BoundsError("omega_fcc_report: only k = 1 is supported");

  OmegaFccReport report;
  report.k = k;
  const int n = 4 * k;
  const Graph omega = hadamard_graph(n);
  report.vertices = omega.vertex_count();
  report.alpha = independence_number(omega);

  // chi_f(omega) = fractional clique cover number of the complement.
  const FccResult cover = clique_cover_fractional(complement(omega));
  report.chi_f = cover.value;
  if (report.chi_f * report.alpha < report.vertices)
    throw BoundsError("omega_fcc_report: chi_f >= |V|/alpha violated");

  // Coordinate +-1 vectors: adjacency is exactly orthogonality, so the
  // normalized rows form an orthonormal representation in dimension n.
  std::vector<ScaledVector> rep(static_cast<std::size_t>(report.vertices));
  for (int v = 0; v < report.vertices; ++v) {
    ScaledVector& u = rep[static_cast<std::size_t>(v)];
    u.entries.assign(static_cast<std::size_t>(n), GaussianRational(0));
    for (int i = 0; i < n; ++i)
      u.entries[static_cast<std::size_t>(i)] = GaussianRational(((v >> i) & 1) ? -1 : 1);
    u.scale2 = Rational(1, n);
    if (u.norm2() != 1) throw BoundsError("omega_fcc_report: representation not unit");
  }
  for (const Edge& e : omega.edges()) {
    if (!raw_inner(rep[static_cast<std::size_t>(e.first)].entries,
                   rep[static_cast<std::size_t>(e.second)].entries)
             .is_zero())
      throw BoundsError("omega_fcc_report: representation not orthogonal on an edge");
  }
  report.xi_upper = n;

  report.ratio = fcc_exponent_ratio(report.chi_f, report.xi_upper);
  return report;
}

}  // namespace zest
