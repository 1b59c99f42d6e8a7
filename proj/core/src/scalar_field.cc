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

#include "olt/scalar_field.h"

#include "olt/errors.h"

namespace olt {

ScalarField::ScalarField(BigInt q) : q_(std::move(q)) {
  if (q_ < 2) throw Error(ErrorCode::kInvalidArgument, "field modulus < 2");
}

Scalar ScalarField::Reduce(const BigInt& v) const {
  BigInt r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), q_.get_mpz_t());
  return Scalar(std::move(r));
}

Scalar ScalarField::Add(const Scalar& a, const Scalar& b) const {
  BigInt r = a.value + b.value;
  if (r >= q_) r -= q_;
  return Scalar(std::move(r));
}

Scalar ScalarField::Sub(const Scalar& a, const Scalar& b) const {
  BigInt r = a.value - b.value;
  if (r < 0) r += q_;
  return Scalar(std::move(r));
}

Scalar ScalarField::Mul(const Scalar& a, const Scalar& b) const {
  return Reduce(a.value * b.value);
}

Scalar ScalarField::Neg(const Scalar& a) const {
  if (a.value == 0) return a;
  return Scalar(q_ - a.value);
}

Scalar ScalarField::Inv(const Scalar& a) const {
  BigInt r;
  if (a.value == 0 ||
      mpz_invert(r.get_mpz_t(), a.value.get_mpz_t(), q_.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero has no inverse");
  }
  return Scalar(std::move(r));
}

Scalar ScalarField::Pow(const Scalar& a, const BigInt& e) const {
  return Scalar(PowMod(a.value, e, q_));
}

}  // namespace olt
