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

#include "zest/exact_matrix.hpp"

#include <algorithm>

namespace zest {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

Matrix Matrix::unit(int rows, int cols, int i, int j) {
  Matrix m(rows, cols);
  m.at(i, j) = GaussianRational(1);
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValueError("matrix shape mismatch in +");
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValueError("matrix shape mismatch in -");
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ValueError("matrix shape mismatch in *");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const GaussianRational& lhs = at(i, k);
      if (lhs.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const GaussianRational& rhs = o.at(k, j);
        if (rhs.is_zero()) continue;
        r.at(i, j) += lhs * rhs;
      }
    }
  }
  return r;
}

Matrix Matrix::scaled(const GaussianRational& c) const {
  Matrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!a_[k].is_zero()) r.a_[k] = a_[k] * c;
  return r;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r.at(j, i) = at(i, j).conj();
  return r;
}

Matrix Matrix::kron(const Matrix& o) const {
  Matrix r(rows_ * o.rows_, cols_ * o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const GaussianRational& c = at(i, j);
      if (c.is_zero()) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l)
          if (!o.at(k, l).is_zero())
            r.at(i * o.rows_ + k, j * o.cols_ + l) = c * o.at(k, l);
    }
  return r;
}

Matrix Matrix::direct_sum(const Matrix& o) const {
  Matrix r(rows_ + o.rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
  return r;
}

GaussianRational Matrix::trace() const {
  if (rows_ != cols_) throw ValueError("trace of non-square matrix");
  GaussianRational t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& c : a_)
    if (!c.is_zero()) return false;
  return true;
}

int Matrix::rank() const {
  SubspaceBasis rows(static_cast<std::size_t>(cols_));
  for (int i = 0; i < rows_; ++i) {
    SparseVec v;
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) v.emplace_back(j, at(i, j));
    rows.insert(std::move(v));
  }
  return static_cast<int>(rows.rank());
}

SparseVec vectorize(const Matrix& m) {
  SparseVec v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero())
        v.emplace_back(static_cast<std::uint32_t>(i) * m.cols() + j, m.at(i, j));
  return v;
}

namespace {

// v -= c * w, both sorted sparse.
void axpy_neg(SparseVec& v, const GaussianRational& c, const SparseVec& w) {
  SparseVec out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      out.emplace_back(w[j].first, -(c * w[j].second));
      ++j;
    } else {
      GaussianRational d = v[i].second - c * w[j].second;
      if (!d.is_zero()) out.emplace_back(v[i].first, std::move(d));
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

}  // namespace

void SubspaceBasis::reduce(SparseVec& v) const {
  // Rows are sorted by pivot; one sweep suffices because every row is fully
  // back-eliminated (no row contains another row's pivot).
  for (const Row& r : rows_) {
    if (v.empty()) return;
    auto it = std::lower_bound(v.begin(), v.end(), r.pivot,
                               [](const auto& e, std::uint32_t p) { return e.first < p; });
    if (it == v.end() || it->first != r.pivot) continue;
    GaussianRational c = it->second;  // row is monic at its pivot
    axpy_neg(v, c, r.v);
  }
}

bool SubspaceBasis::contains(SparseVec v) const {
  reduce(v);
  return v.empty();
}

bool SubspaceBasis::insert(SparseVec v) {
  for (const auto& [idx, val] : v) {
    if (idx >= width_) throw ValueError("vector index beyond subspace width");
    if (val.is_zero()) throw ValueError("explicit zero in sparse vector");
  }
  reduce(v);
  if (v.empty()) return false;
  const std::uint32_t pivot = v.front().first;
  GaussianRational lead = v.front().second;
  for (auto& [idx, val] : v) val = val / lead;
  for (Row& r : rows_) {
    auto it = std::lower_bound(r.v.begin(), r.v.end(), pivot,
                               [](const auto& e, std::uint32_t p) { return e.first < p; });
    if (it == r.v.end() || it->first != pivot) continue;
    GaussianRational c = it->second;
    axpy_neg(r.v, c, v);
  }
  Row row{pivot, std::move(v)};
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                              [](const Row& r, std::uint32_t p) { return r.pivot < p; });
  rows_.insert(pos, std::move(row));
  return true;
}

}  // namespace zest
