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

#ifndef ZEST_RATIONAL_HPP_
#define ZEST_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace zest {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

struct ValueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "num/den" (or a bare integer). Denominator must be nonzero.
Rational parse_rational(const std::string& s);

// Always prints with an explicit denominator, e.g. "3/4", "5/1".
std::string rational_string(const Rational& q);

double to_double(const Rational& q);

// Element of Q(i). Numerators and denominators stay exact; GMP keeps the
// rational parts canonical.
struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(int r) : re(r), im(0) {}  // NOLINT(runtime/explicit)
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    a += b;
    return a;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    a -= b;
    return a;
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw ValueError("division by zero Gaussian rational");
    Rational n2 = b.norm2();
    GaussianRational num = a * b.conj();
    return {num.re / n2, num.im / n2};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

}  // namespace zest

#endif  // ZEST_RATIONAL_HPP_
