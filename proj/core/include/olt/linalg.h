// Copyright 2026 The OLT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "olt/random.h"
#include "olt/scalar_field.h"

namespace olt {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over Z_q.
class Matrix {
 public:
  // rows x cols zero matrix; both dimensions must be at least 1.
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix Identity(std::size_t n);
  // Throws kDimensionMismatch on ragged or empty input.
  static Matrix FromRows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  Vector Row(std::size_t i) const;
  Vector Col(std::size_t j) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

// (1, x, x^2, ..., x^(n-1)) mod q.
Vector PowerVector(const ScalarField& field, const Scalar& x, std::size_t n);

// Row i is PowerVector(xs[i], n). Throws kDuplicateInput when two entries of
// xs coincide mod q and kInvalidArgument when xs is empty.
Matrix Vandermonde(const ScalarField& field, const Vector& xs);

// Solves m * x = y by Gauss-Jordan elimination, pivoting on the first
// nonzero entry of each column. Throws kSingularMatrix or kDimensionMismatch.
Vector Solve(const ScalarField& field, const Matrix& m, const Vector& y);

Matrix Invert(const ScalarField& field, const Matrix& m);

std::size_t Rank(const ScalarField& field, const Matrix& m);
bool IsInvertible(const ScalarField& field, const Matrix& m);

// Uniform entries, resampled until invertible. `attempts`, if given,
// receives the number of matrices drawn.
Matrix RandomInvertible(const ScalarField& field, std::size_t n,
                        RandomSource& rng, std::size_t* attempts = nullptr);

Scalar Dot(const ScalarField& field, const Vector& a, const Vector& b);
Vector MatVec(const ScalarField& field, const Matrix& m, const Vector& x);
Matrix MatMul(const ScalarField& field, const Matrix& a, const Matrix& b);

}  // namespace olt
