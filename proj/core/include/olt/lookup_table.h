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
#include <optional>
#include <vector>

#include "olt/elgamal.h"
#include "olt/linalg.h"

namespace olt {

// One row of a function table: f(x) = y, both in Z_q.
struct Mapping {
  Scalar x;
  Scalar y;
};

// f: X -> Y given by its graph. Repeated y values are allowed.
struct FunctionSpec {
  std::vector<Mapping> pairs;

  std::size_t size() const { return pairs.size(); }
  Vector xs() const;
  Vector ys() const;
  // f(x) if x is in X.
  std::optional<Scalar> Apply(const Scalar& x) const;
  // Whether every y appears among the x values.
  bool IsClosed() const;
};

// Throws kInvalidArgument (empty spec, unreduced values), kTableTooLarge
// (n >= q), kDuplicateInput, and, when `require_closed`, kNotClosed.
void CheckSpec(const GroupParams& params, const FunctionSpec& spec,
               bool require_closed);

// Public table ell with dot(v_i, ell) = f(x_i).
struct SingleTable {
  Vector ell;
  GroupParams params;

  std::size_t n() const { return ell.size(); }
};

// Column j (0-based) maps the encoding of x to g^(f(x)^j).
struct LookupMatrix {
  std::vector<Vector> columns;
  GroupParams params;

  std::size_t n() const { return columns.size(); }
};

// Ciphertexts of g^(x^0), g^(x^1), ..., g^(x^(n-1)).
struct EncodedInput {
  std::vector<Ciphertext> cts;
  GroupParams params;

  std::size_t n() const { return cts.size(); }
};

// Samples an invertible U, solves (V U) alpha = y and returns ell = U alpha.
SingleTable BuildSingleTable(const GroupParams& params,
                             const FunctionSpec& spec, RandomSource& rng);

// Same table by direct interpolation, ell = V^-1 y.
SingleTable InterpolateTable(const GroupParams& params,
                             const FunctionSpec& spec);

// Chainable table for a closed f: X -> X. Each column is built with its own
// independently sampled U.
LookupMatrix BuildLookupMatrix(const GroupParams& params,
                               const FunctionSpec& spec, RandomSource& rng);

// Fresh, independent nonces per component. Throws kInvalidArgument for n = 0.
EncodedInput Encode(const GroupParams& params, const GroupElem& pk,
                    const Scalar& x, std::size_t n, RandomSource& rng,
                    ExpCounter* counter = nullptr);

// prod_k cts[k]^ell[k]. Performs exactly n ciphertext exponentiations; zero
// table entries are not skipped. For x outside X the result encrypts the
// interpolating polynomial's value, which the evaluator cannot detect.
Ciphertext EvalSingle(const EncodedInput& enc, const SingleTable& table,
                      ExpCounter* counter = nullptr);

struct ChainOptions {
  bool rerandomize = false;
  // Worker threads for the column evaluations; 1 runs inline.
  unsigned threads = 1;
};

// Evaluates every column of `matrix` on `enc`; the output is the encoding
// of f(x) and can be fed back in. n^2 ciphertext exponentiations, plus n
// re-randomizations when requested.
EncodedInput EvalChain(const EncodedInput& enc, const LookupMatrix& matrix,
                       const GroupElem& pk, RandomSource& rng,
                       const ChainOptions& options = {},
                       ExpCounter* counter = nullptr);

// Plaintext lookup dot((1, x, ..., x^(n-1)), ell). Throws kUnknownInput if
// x is not in the spec's domain.
Scalar PlainLookup(const Scalar& x, const FunctionSpec& spec,
                   const SingleTable& table);

}  // namespace olt
