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

#ifndef ZEST_BOUNDS_HPP_
#define ZEST_BOUNDS_HPP_

#include <stdexcept>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "zest/rational.hpp"

namespace zest {

struct BoundsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// High-precision real used for exponent bounds (100 decimal digits).
using HighFloat = boost::multiprecision::mpfr_float_100;

// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
Integer binomial_coefficient(int n, int k);

// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x) with h(0) = h(1) = 0.
// Throws BoundsError outside [0, 1].
HighFloat binary_entropy(const HighFloat& x);

// Lower bound on admissible exponents derived from codes over F_p, for an
// odd prime p such that a Hadamard matrix of size 4p exists.  The existence
// hypothesis is the caller's responsibility and recorded as a note.
struct FpBoundReport {
  int p = 0;
  // C(4p-1, 2p) and sum_{i=0}^{p-1} C(4p-1, i).
  Integer central_binomial;
  Integer tail_sum;
  // [log2 C(4p-1,2p) - log2 tail_sum - log2(4p-1)] / log2(4p-1).
  HighFloat binomial_form;
  // [(4p-1)(h(1/2 + 1/(8p-2)) - h(1/4 + 1/(16p-4))) - log2(16p^2-4p)]
  //   / log2(4p-1); never exceeds the binomial form.
  HighFloat entropy_form;
  // True when the binomial form is a nontrivial constraint (> 1).
  bool exceeds_one = false;
  std::string assumption;
};

// Throws BoundsError unless p is an odd prime.
FpBoundReport fp_exponent_lower_bound(int p);

// log2(chi_f_lb) / log2(xi_complement_ub): a lower bound on any admissible
// exponent for the fractional clique cover number witnessed by a graph with
// these parameters.  Requires chi_f_lb > 1 and xi_complement_ub >= 2.
HighFloat fcc_exponent_ratio(const Rational& chi_f_lb, int xi_complement_ub);

// Exact study of the Hadamard graph on {-1,1}^4: independence number,
// fractional chromatic number (LP over maximal independent sets), the
// coordinate +-1 orthonormal representation certifying xi <= 4, and the
// resulting exponent ratio.  Only k = 1 is within desk scale.
struct OmegaFccReport {
  int k = 0;
  int vertices = 0;
  long long alpha = 0;
  Rational chi_f;
  int xi_upper = 0;
  HighFloat ratio;
};

OmegaFccReport omega_fcc_report(int k);

}  // namespace zest

#endif  // ZEST_BOUNDS_HPP_
