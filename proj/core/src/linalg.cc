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

#include "olt/linalg.h"

#include <optional>
#include <set>
#include <string>
#include <utility>

#include "olt/errors.h"

namespace olt {
namespace {

void RequireSquare(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected a square matrix, got " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
  }
}

// Reduces the augmented matrix [m | rhs] in place to [I | m^-1 rhs].
// Returns false if some column has no nonzero pivot.
bool GaussJordan(const ScalarField& field, Matrix& m, Matrix& rhs) {
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = col; r < n; ++r) {
      if (m(r, col).value != 0) {
        pivot = r;
        break;
      }
    }
    if (!pivot) return false;
    if (*pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(*pivot, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        std::swap(rhs(col, j), rhs(*pivot, j));
      }
    }
    const Scalar inv = field.Inv(m(col, col));
    for (std::size_t j = 0; j < n; ++j) m(col, j) = field.Mul(m(col, j), inv);
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      rhs(col, j) = field.Mul(rhs(col, j), inv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col).value == 0) continue;
      const Scalar factor = m(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) = field.Sub(m(r, j), field.Mul(factor, m(col, j)));
      }
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        rhs(r, j) = field.Sub(rhs(r, j), field.Mul(factor, rhs(col, j)));
      }
    }
  }
  return true;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(BigInt(0))) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix dimensions must be >= 1");
  }
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(BigInt(1));
  return m;
}

Matrix Matrix::FromRows(const std::vector<Vector>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "empty matrix");
  }
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
    }
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::Row(std::size_t i) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::Col(std::size_t j) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

Vector PowerVector(const ScalarField& field, const Scalar& x, std::size_t n) {
  Vector out;
  out.reserve(n);
  Scalar acc = field.One();
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(acc);
    acc = field.Mul(acc, x);
  }
  return out;
}

Matrix Vandermonde(const ScalarField& field, const Vector& xs) {
  if (xs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "vandermonde needs >= 1 point");
  }
  std::set<BigInt> seen;
  for (const Scalar& x : xs) {
    if (!seen.insert(field.Reduce(x.value).value).second) {
      throw Error(ErrorCode::kDuplicateInput,
                  "repeated evaluation point " + x.value.get_str(16));
    }
  }
  const std::size_t n = xs.size();
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector row = PowerVector(field, field.Reduce(xs[i].value), n);
    for (std::size_t j = 0; j < n; ++j) v(i, j) = std::move(row[j]);
  }
  return v;
}

Vector Solve(const ScalarField& field, const Matrix& m, const Vector& y) {
  RequireSquare(m);
  if (y.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "right-hand side has length " + std::to_string(y.size()) +
                    ", expected " + std::to_string(m.rows()));
  }
  Matrix work = m;
  Matrix rhs(y.size(), 1);
  for (std::size_t i = 0; i < y.size(); ++i) rhs(i, 0) = y[i];
  if (!GaussJordan(field, work, rhs)) {
    throw Error(ErrorCode::kSingularMatrix, "no nonzero pivot");
  }
  return rhs.Col(0);
}

Matrix Invert(const ScalarField& field, const Matrix& m) {
  RequireSquare(m);
  Matrix work = m;
  Matrix inv = Matrix::Identity(m.rows());
  if (!GaussJordan(field, work, inv)) {
    throw Error(ErrorCode::kSingularMatrix, "no nonzero pivot");
  }
  return inv;
}

std::size_t Rank(const ScalarField& field, const Matrix& m) {
  Matrix work = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < work.cols() && rank < work.rows(); ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t r = rank; r < work.rows(); ++r) {
      if (work(r, col).value != 0) {
        pivot = r;
        break;
      }
    }
    if (!pivot) continue;
    for (std::size_t j = 0; j < work.cols(); ++j) {
      std::swap(work(rank, j), work(*pivot, j));
    }
    const Scalar inv = field.Inv(work(rank, col));
    for (std::size_t r = rank + 1; r < work.rows(); ++r) {
      if (work(r, col).value == 0) continue;
      const Scalar factor = field.Mul(work(r, col), inv);
      for (std::size_t j = col; j < work.cols(); ++j) {
        work(r, j) = field.Sub(work(r, j), field.Mul(factor, work(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

bool IsInvertible(const ScalarField& field, const Matrix& m) {
  return m.is_square() && Rank(field, m) == m.rows();
}

Matrix RandomInvertible(const ScalarField& field, std::size_t n,
                        RandomSource& rng, std::size_t* attempts) {
  std::size_t drawn = 0;
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = Scalar(rng.Below(field.modulus()));
      }
    }
    ++drawn;
    if (IsInvertible(field, m)) {
      if (attempts != nullptr) *attempts = drawn;
      return m;
    }
  }
}

Scalar Dot(const ScalarField& field, const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dot of lengths " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  BigInt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].value * b[i].value;
  return field.Reduce(acc);
}

Vector MatVec(const ScalarField& field, const Matrix& m, const Vector& x) {
  if (x.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix-vector shape mismatch");
  }
  Vector out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j).value * x[j].value;
    out.push_back(field.Reduce(acc));
  }
  return out;
}

Matrix MatMul(const ScalarField& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k).value * b(k, j).value;
      out(i, j) = field.Reduce(acc);
    }
  }
  return out;
}

}  // namespace olt
