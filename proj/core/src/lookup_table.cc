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

#include "olt/lookup_table.h"

#include <algorithm>
#include <future>
#include <set>
#include <string>

#include "olt/errors.h"

namespace olt {
namespace {

void RequireSameParams(const GroupParams& a, const GroupParams& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::kParamsMismatch,
                "operands belong to different groups");
  }
}

Vector BuildColumn(const ScalarField& field, const Matrix& vandermonde,
                   const Vector& target, RandomSource& rng) {
  const Matrix u = RandomInvertible(field, vandermonde.rows(), rng);
  const Vector alpha = Solve(field, MatMul(field, vandermonde, u), target);
  return MatVec(field, u, alpha);
}

}  // namespace

Vector FunctionSpec::xs() const {
  Vector out;
  out.reserve(pairs.size());
  for (const Mapping& m : pairs) out.push_back(m.x);
  return out;
}

Vector FunctionSpec::ys() const {
  Vector out;
  out.reserve(pairs.size());
  for (const Mapping& m : pairs) out.push_back(m.y);
  return out;
}

std::optional<Scalar> FunctionSpec::Apply(const Scalar& x) const {
  auto it = std::find_if(pairs.begin(), pairs.end(),
                         [&](const Mapping& m) { return m.x == x; });
  if (it == pairs.end()) return std::nullopt;
  return it->y;
}

bool FunctionSpec::IsClosed() const {
  return std::all_of(pairs.begin(), pairs.end(), [&](const Mapping& m) {
    return Apply(m.y).has_value();
  });
}

void CheckSpec(const GroupParams& params, const FunctionSpec& spec,
               bool require_closed) {
  if (spec.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "function spec is empty");
  }
  if (BigInt(static_cast<unsigned long>(spec.size())) >= params.q) {
    throw Error(ErrorCode::kTableTooLarge,
                "n = " + std::to_string(spec.size()) +
                    " must be smaller than the subgroup order");
  }
  std::set<BigInt> seen;
  for (const Mapping& m : spec.pairs) {
    if (m.x.value < 0 || m.x.value >= params.q || m.y.value < 0 ||
        m.y.value >= params.q) {
      throw Error(ErrorCode::kInvalidArgument,
                  "spec values must be reduced mod q");
    }
    if (!seen.insert(m.x.value).second) {
      throw Error(ErrorCode::kDuplicateInput,
                  "x = " + m.x.value.get_str(16) + " listed twice");
    }
  }
  if (require_closed) {
    for (const Mapping& m : spec.pairs) {
      if (!seen.contains(m.y.value)) {
        throw Error(ErrorCode::kNotClosed,
                    "f(" + m.x.value.get_str(16) + ") = " +
                        m.y.value.get_str(16) + " is not in the domain");
      }
    }
  }
}

SingleTable BuildSingleTable(const GroupParams& params,
                             const FunctionSpec& spec, RandomSource& rng) {
  CheckSpec(params, spec, /*require_closed=*/false);
  const ScalarField field(params);
  const Matrix v = Vandermonde(field, spec.xs());
  return SingleTable{BuildColumn(field, v, spec.ys(), rng), params};
}

SingleTable InterpolateTable(const GroupParams& params,
                             const FunctionSpec& spec) {
  CheckSpec(params, spec, /*require_closed=*/false);
  const ScalarField field(params);
  return SingleTable{Solve(field, Vandermonde(field, spec.xs()), spec.ys()),
                     params};
}

LookupMatrix BuildLookupMatrix(const GroupParams& params,
                               const FunctionSpec& spec, RandomSource& rng) {
  CheckSpec(params, spec, /*require_closed=*/true);
  const ScalarField field(params);
  const Matrix v = Vandermonde(field, spec.xs());
  const std::size_t n = spec.size();

  LookupMatrix out{{}, params};
  out.columns.reserve(n);
  // powers[i] walks f(x_i)^j as j advances.
  Vector powers(n, field.One());
  const Vector ys = spec.ys();
  for (std::size_t j = 0; j < n; ++j) {
    out.columns.push_back(BuildColumn(field, v, powers, rng));
    for (std::size_t i = 0; i < n; ++i) powers[i] = field.Mul(powers[i], ys[i]);
  }
  return out;
}

EncodedInput Encode(const GroupParams& params, const GroupElem& pk,
                    const Scalar& x, std::size_t n, RandomSource& rng,
                    ExpCounter* counter) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "encoding length must be >= 1");
  }
  const ScalarField field(params);
  EncodedInput out{{}, params};
  out.cts.reserve(n);
  for (const Scalar& e : PowerVector(field, field.Reduce(x.value), n)) {
    out.cts.push_back(
        Encrypt(params, pk, GroupPow(params, e, counter), rng, counter));
  }
  return out;
}

Ciphertext EvalSingle(const EncodedInput& enc, const SingleTable& table,
                      ExpCounter* counter) {
  RequireSameParams(enc.params, table.params);
  if (enc.n() != table.n() || enc.n() == 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "encoding has " + std::to_string(enc.n()) +
                    " components, table has " + std::to_string(table.n()));
  }
  const GroupParams& params = enc.params;
  Ciphertext acc = CtPow(params, enc.cts[0], table.ell[0], counter);
  for (std::size_t k = 1; k < enc.n(); ++k) {
    acc = CtMul(params, acc, CtPow(params, enc.cts[k], table.ell[k], counter));
  }
  return acc;
}

EncodedInput EvalChain(const EncodedInput& enc, const LookupMatrix& matrix,
                       const GroupElem& pk, RandomSource& rng,
                       const ChainOptions& options, ExpCounter* counter) {
  RequireSameParams(enc.params, matrix.params);
  const std::size_t n = matrix.n();
  if (enc.n() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "encoding has " + std::to_string(enc.n()) +
                    " components, matrix has " + std::to_string(n));
  }
  for (const Vector& column : matrix.columns) {
    if (column.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "lookup matrix not square");
    }
  }

  EncodedInput out{std::vector<Ciphertext>(n), enc.params};
  auto eval_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      out.cts[j] =
          EvalSingle(enc, SingleTable{matrix.columns[j], matrix.params}, counter);
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    eval_range(0, n);
  } else {
    std::vector<std::future<void>> jobs;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
      jobs.push_back(std::async(std::launch::async, eval_range, begin,
                                std::min(n, begin + chunk)));
    }
    for (auto& job : jobs) job.get();
  }

  // rng is single-threaded, so re-randomization stays on this thread.
  if (options.rerandomize) {
    for (Ciphertext& c : out.cts) {
      c = Rerandomize(out.params, pk, c, rng, counter);
    }
  }
  return out;
}

Scalar PlainLookup(const Scalar& x, const FunctionSpec& spec,
                   const SingleTable& table) {
  if (!spec.Apply(x)) {
    throw Error(ErrorCode::kUnknownInput,
                "x = " + x.value.get_str(16) + " is not in the table domain");
  }
  const ScalarField field(table.params);
  return Dot(field, PowerVector(field, x, table.n()), table.ell);
}

}  // namespace olt
