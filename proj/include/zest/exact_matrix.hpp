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

#ifndef ZEST_EXACT_MATRIX_HPP_
#define ZEST_EXACT_MATRIX_HPP_

#include <cstdint>
#include <vector>

#include "zest/rational.hpp"

namespace zest {

// Dense matrix over Q(i), row major. Sizes stay desk scale (ambient
// dimensions of a few hundred at most); multiplication skips zero entries
// since most matrices here are sparse basis elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static Matrix identity(int n);
  // Single-entry matrix E_{i,j}.
  static Matrix unit(int rows, int cols, int i, int j);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussianRational& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const GaussianRational& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const GaussianRational& c) const;
  Matrix adjoint() const;  // conjugate transpose
  Matrix kron(const Matrix& o) const;
  Matrix direct_sum(const Matrix& o) const;
  GaussianRational trace() const;
  bool is_zero() const;
  int rank() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<GaussianRational> a_;
};

// Matrix held unnormalized as sqrt(scale2) * matrix with rational scale2 > 0,
// so Hadamard-type isometries stay exact.
struct ScaledMatrix {
  Matrix matrix;
  Rational scale2 = 1;
};

// Sparse vector over Q(i): (index, value) pairs, sorted by index, no zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, GaussianRational>>;

SparseVec vectorize(const Matrix& m);  // row-major flattening

// Reduced row echelon span of sparse vectors with the leftmost-pivot order.
// Rows are kept monic and fully back-eliminated, so the row set is a
// canonical basis of the span.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  // Reduces v against the rows in place; afterwards v has no entry at any
  // pivot index.
  void reduce(SparseVec& v) const;
  bool contains(SparseVec v) const;
  bool contains(const Matrix& m) const { return contains(vectorize(m)); }
  // Inserts the vector's residual if independent; returns true if rank grew.
  bool insert(SparseVec v);

 private:
  struct Row {
    std::uint32_t pivot;
    SparseVec v;
  };
  std::size_t width_;
  std::vector<Row> rows_;  // increasing pivot
};

}  // namespace zest

#endif  // ZEST_EXACT_MATRIX_HPP_
