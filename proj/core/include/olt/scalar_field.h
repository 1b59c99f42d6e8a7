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

#include "olt/group.h"

namespace olt {

// Arithmetic in Z_q for prime q. Inputs are expected reduced; outputs are.
class ScalarField {
 public:
  explicit ScalarField(BigInt q);
  explicit ScalarField(const GroupParams& params) : ScalarField(params.q) {}

  const BigInt& modulus() const { return q_; }

  Scalar Reduce(const BigInt& v) const;
  Scalar FromInt(long v) const { return Reduce(BigInt(v)); }
  bool IsReduced(const Scalar& s) const { return s.value >= 0 && s.value < q_; }

  Scalar Zero() const { return Scalar(BigInt(0)); }
  Scalar One() const { return Scalar(BigInt(1)); }

  Scalar Add(const Scalar& a, const Scalar& b) const;
  Scalar Sub(const Scalar& a, const Scalar& b) const;
  Scalar Mul(const Scalar& a, const Scalar& b) const;
  Scalar Neg(const Scalar& a) const;
  // Multiplicative inverse by extended Euclid. Throws kInvalidArgument on 0.
  Scalar Inv(const Scalar& a) const;
  Scalar Pow(const Scalar& a, const BigInt& e) const;

 private:
  BigInt q_;
};

}  // namespace olt
