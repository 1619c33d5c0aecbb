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

#include "zest/simplex.hpp"

#include <cstddef>

namespace zest {

namespace {

struct Tableau {
  // rows 0..m-1: constraints; row m: phase-2 reduced costs; row m+1: phase-1.
  std::vector<std::vector<Rational>> t;
  std::vector<int> basic;  // basic column per constraint row
  int m, cols, rhs;

  void pivot(int r, int e) {
    Rational p = t[r][e];
    for (int j = 0; j <= cols; ++j)
      if (!t[r][j].is_zero()) t[r][j] /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      Rational f = t[i][e];
      if (f.is_zero()) continue;
      for (int j = 0; j <= cols; ++j)
        if (!t[r][j].is_zero()) t[i][j] -= f * t[r][j];
    }
    basic[r] = e;
  }

  // Bland's rule: smallest eligible entering column; leaving row by minimum
  // ratio, ties broken by smallest basic variable index.
  // Returns false when optimal, throws on unboundedness.
  bool step(int obj_row, int entering_limit, bool* unbounded) {
    int e = -1;
    for (int j = 0; j < entering_limit; ++j)
      if (t[obj_row][j] < 0) {
        e = j;
        break;
      }
    if (e < 0) return false;
    int r = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][e] <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][e];
      if (r < 0 || ratio < best || (ratio == best && basic[i] < basic[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r < 0) {
      *unbounded = true;
      return false;
    }
    pivot(r, e);
    return true;
  }
};

}  // namespace

LpSolution simplex_min_ge(const std::vector<std::vector<Rational>>& A,
                          const std::vector<Rational>& b,
                          const std::vector<Rational>& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m) throw ValueError("lp rhs size mismatch");
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != n) throw ValueError("lp row size mismatch");

  // Rows with negative rhs are negated so every rhs is nonnegative; their
  // surplus column then has coefficient +1 and starts basic. Other rows get
  // an artificial variable.
  std::vector<int> art_of_row(m, -1);
  int n_art = 0;
  for (int i = 0; i < m; ++i)
    if (b[i] >= 0) art_of_row[i] = n_art++;
  Tableau tb;
  tb.m = m;
  tb.cols = n + m + n_art;
  tb.rhs = tb.cols;
  tb.t.assign(m + 2, std::vector<Rational>(tb.cols + 1, Rational(0)));
  tb.basic.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    const int sign = b[i] >= 0 ? 1 : -1;
    for (int j = 0; j < n; ++j)
      if (!A[i][j].is_zero()) tb.t[i][j] = sign * A[i][j];
    tb.t[i][n + i] = Rational(-sign);
    tb.t[i][tb.rhs] = sign * b[i];
    if (art_of_row[i] >= 0) {
      tb.t[i][n + m + art_of_row[i]] = 1;
      tb.basic[i] = n + m + art_of_row[i];
    } else {
      tb.basic[i] = n + i;
    }
  }
  for (int j = 0; j < n; ++j) tb.t[m][j] = c[j];
  // Phase-1 objective: sum of artificials, expressed in reduced-cost form.
  for (int i = 0; i < m; ++i) {
    if (art_of_row[i] < 0) continue;
    for (int j = 0; j <= tb.cols; ++j)
      if (!tb.t[i][j].is_zero()) tb.t[m + 1][j] -= tb.t[i][j];
    tb.t[m + 1][n + m + art_of_row[i]] += 1;
  }

  LpSolution sol;
  bool unbounded = false;
  while (tb.step(m + 1, tb.cols, &unbounded)) {
  }
  if (!tb.t[m + 1][tb.rhs].is_zero()) {
    sol.feasible = false;
    return sol;
  }
  // Drive leftover artificials out of the basis where possible; rows that
  // cannot pivot are redundant and artificials stay basic at zero (they are
  // excluded from entering in phase 2).
  for (int i = 0; i < m; ++i) {
    if (tb.basic[i] < n + m) continue;
    for (int j = 0; j < n + m; ++j)
      if (!tb.t[i][j].is_zero()) {
        tb.pivot(i, j);
        break;
      }
  }
  sol.feasible = true;
  while (tb.step(m, n + m, &unbounded)) {
  }
  if (unbounded) {
    sol.bounded = false;
    return sol;
  }
  sol.bounded = true;
  sol.objective = -tb.t[m][tb.rhs];
  sol.x.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (tb.basic[i] < n) sol.x[tb.basic[i]] = tb.t[i][tb.rhs];
  sol.dual.assign(m, Rational(0));
  for (int i = 0; i < m; ++i) sol.dual[i] = tb.t[m][n + i];
  return sol;
}

}  // namespace zest
