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

#include <chrono>
#include <cmath>

#include "zest/bounds.hpp"
#include "zest/graph.hpp"

using namespace zest;

namespace {

// Independent log2 oracle: fixed-point mantissa with kWorkBits fraction
// bits, repeated squaring extracts kOutBits binary digits.  Uses only exact
// integer arithmetic, no MPFR.
constexpr int kWorkBits = 256;
constexpr int kOutBits = 80;

Rational log2_oracle(Integer num, Integer den) {
  REQUIRE(num > 0);
  REQUIRE(den > 0);
  long long k = 0;
  while (num < den) {
    num <<= 1;
    --k;
  }
  while (num >= (den << 1)) {
    den <<= 1;
    ++k;
  }
  Integer m = (num << kWorkBits) / den;
  const Integer overflow = Integer(1) << (kWorkBits + 1);
  Integer bits = 0;
  for (int b = 0; b < kOutBits; ++b) {
    m = (m * m) >> kWorkBits;
    int bit = 0;
    if (m >= overflow) {
      bit = 1;
      m >>= 1;
    }
    bits = (bits << 1) + bit;
  }
  return Rational(k) + Rational(bits) / Rational(Integer(1) << kOutBits);
}

double abs_diff(const HighFloat& a, double b) {
  return std::fabs(static_cast<double>(a) - b);
}

}  // namespace

TEST_CASE("log2 oracle sanity") {
  CHECK(log2_oracle(1, 1) == 0);
  CHECK(log2_oracle(8, 1) == 3);
  CHECK(log2_oracle(1, 4) == -2);
  CHECK(std::fabs(to_double(log2_oracle(3, 1)) - std::log2(3.0)) < 1e-14);
  CHECK(std::fabs(to_double(log2_oracle(5, 7)) - std::log2(5.0 / 7.0)) < 1e-14);
  CHECK(std::fabs(to_double(log2_oracle(Integer("14226520737620288370"), 1)) -
                  63.62521667988087) < 1e-10);
}

TEST_CASE("binomial coefficients are exact") {
  CHECK(binomial_coefficient(4, 2) == 6);
  CHECK(binomial_coefficient(10, 0) == 1);
  CHECK(binomial_coefficient(10, 10) == 1);
  CHECK(binomial_coefficient(5, 7) == 0);
  CHECK(binomial_coefficient(-1, 0) == 0);
  CHECK(binomial_coefficient(67, 34) == Integer("14226520737620288370"));
  CHECK(binomial_coefficient(67, 34) == binomial_coefficient(67, 33));
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(binomial_coefficient(n, k) ==
            binomial_coefficient(n - 1, k - 1) + binomial_coefficient(n - 1, k));
}

TEST_CASE("binary entropy") {
  CHECK(abs(binary_entropy(HighFloat(1) / 2) - 1) < 1e-90);
  CHECK(binary_entropy(HighFloat(0)) == 0);
  CHECK(binary_entropy(HighFloat(1)) == 0);
  const HighFloat quarter = binary_entropy(HighFloat(1) / 4);
  CHECK(abs_diff(quarter, 0.8112781244591328) < 1e-12);
  CHECK(abs(quarter - binary_entropy(HighFloat(3) / 4)) < 1e-95);
  // h(1/4) = 2 - (3/4) log2 3, checked against the integer oracle.
  const double expected = 2.0 - 0.75 * to_double(log2_oracle(3, 1));
  CHECK(abs_diff(quarter, expected) < 1e-14);
  CHECK_THROWS_AS(binary_entropy(HighFloat(-0.01)), BoundsError);
  CHECK_THROWS_AS(binary_entropy(HighFloat(1.01)), BoundsError);
}

TEST_CASE("fp bound at p = 17 matches golden values") {
  const auto start = std::chrono::steady_clock::now();
  const FpBoundReport report = fp_exponent_lower_bound(17);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(seconds < 1.0);

  CHECK(report.p == 17);
  CHECK(report.central_binomial == Integer("14226520737620288370"));
  CHECK(report.tail_sum == Integer("1600383346290116"));
  CHECK(report.binomial_form > 1.16249);
  CHECK(report.binomial_form < 1.162495);  // rounds to 1.16249 at 6 s.f.
  CHECK(abs_diff(report.binomial_form, 1.1624933830720218) < 1e-11);
  CHECK(report.exceeds_one);
  CHECK(abs_diff(report.entropy_form, 0.0144051981762562) < 1e-12);
  CHECK(report.binomial_form >= report.entropy_form);
  CHECK(report.assumption.find("68") != std::string::npos);

  // Recompute the binomial form from the exact ingredients with the
  // independent oracle; agreement far beyond 10 significant digits.
  const Rational ln = log2_oracle(4 * 17 - 1, 1);
  const Rational num = log2_oracle(report.central_binomial, 1) -
                       log2_oracle(report.tail_sum, 1) - ln;
  const double oracle_value = to_double(num / ln);
  CHECK(abs_diff(report.binomial_form, oracle_value) < 1e-12);
}

TEST_CASE("fp bound is trivial for small primes") {
  for (int p : {3, 5, 7, 11, 13}) {
    const FpBoundReport report = fp_exponent_lower_bound(p);
    CHECK(report.binomial_form < 1);
    CHECK(!report.exceeds_one);
    CHECK(report.binomial_form >= report.entropy_form);
  }
  CHECK(fp_exponent_lower_bound(3).binomial_form < 0);
}

TEST_CASE("fp bound rejects non odd primes") {
  for (int p : {-3, 0, 1, 2, 4, 9, 15, 21}) {
    CHECK_THROWS_AS(fp_exponent_lower_bound(p), BoundsError);
  }
}

TEST_CASE("fp bound ordering and growth") {
  HighFloat previous(-1000);
  for (int p : {17, 29, 41, 53, 101}) {
    const FpBoundReport report = fp_exponent_lower_bound(p);
    CHECK(report.binomial_form > previous);
    previous = report.binomial_form;
  }
  for (int p = 3; p <= 101; p += 2) {
    if (!is_prime(p)) continue;
    const FpBoundReport report = fp_exponent_lower_bound(p);
    CHECK(report.binomial_form >= report.entropy_form);
    CHECK(report.central_binomial > 0);
    CHECK(report.tail_sum > 0);
  }
}

TEST_CASE("fcc exponent ratio") {
  CHECK(abs(fcc_exponent_ratio(Rational(2), 2) - 1) < 1e-90);
  CHECK(abs(fcc_exponent_ratio(Rational(4), 2) - 2) < 1e-90);
  CHECK(abs(fcc_exponent_ratio(Rational(4), 4) - 1) < 1e-90);
  const HighFloat r = fcc_exponent_ratio(Rational(5) / 2, 4);
  CHECK(abs_diff(r, 0.6610) < 5e-5);
  CHECK(abs_diff(r, to_double(log2_oracle(5, 2) / 2)) < 1e-14);
  CHECK_THROWS_AS(fcc_exponent_ratio(Rational(1), 2), BoundsError);
  CHECK_THROWS_AS(fcc_exponent_ratio(Rational(1) / 2, 2), BoundsError);
  CHECK_THROWS_AS(fcc_exponent_ratio(Rational(2), 1), BoundsError);
  CHECK_THROWS_AS(fcc_exponent_ratio(Rational(2), 0), BoundsError);
}

TEST_CASE("omega fcc report") {
  const OmegaFccReport report = omega_fcc_report(1);
  CHECK(report.k == 1);
  CHECK(report.vertices == 16);
  CHECK(report.alpha == 4);
  CHECK(report.chi_f == Rational(4));
  CHECK(report.chi_f * report.alpha >= report.vertices);
  CHECK(report.chi_f == Rational(report.vertices) / report.alpha);
  CHECK(report.xi_upper == 4);
  CHECK(abs(report.ratio - 1) < 1e-90);
  CHECK_THROWS_AS(omega_fcc_report(0), BoundsError);
  CHECK_THROWS_AS(omega_fcc_report(2), BoundsError);
}
