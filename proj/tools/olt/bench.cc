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

#include "olt/bench.h"

#include <chrono>
#include <set>
#include <sstream>

#include "olt/errors.h"

namespace olt::bench {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::string_view OperationName(Operation op) {
  switch (op) {
    case Operation::kBuild:
      return "build";
    case Operation::kEvalSingle:
      return "eval_single";
    case Operation::kEvalChain:
      return "eval_chain";
  }
  return "unknown";
}

FunctionSpec RandomClosedSpec(const GroupParams& params, std::size_t n,
                              RandomSource& rng) {
  if (n == 0 || BigInt(static_cast<unsigned long>(n)) >= params.q) {
    throw Error(ErrorCode::kTableTooLarge,
                "n = " + std::to_string(n) + " needs 1 <= n < q");
  }
  std::set<BigInt> seen;
  Vector xs;
  while (xs.size() < n) {
    Scalar x = RandomScalar(params, rng);
    if (seen.insert(x.value).second) xs.push_back(std::move(x));
  }
  FunctionSpec spec;
  for (const Scalar& x : xs) {
    const std::size_t target =
        rng.Below(static_cast<unsigned long>(n)).get_ui();
    spec.pairs.push_back(Mapping{x, xs[target]});
  }
  return spec;
}

std::vector<BenchRecord> RunBench(const GroupParams& params,
                                  const BenchConfig& config,
                                  RandomSource& rng) {
  std::vector<BenchRecord> records;
  const std::size_t bits = params.bits();
  for (std::size_t n : config.ns) {
    const FunctionSpec spec = RandomClosedSpec(params, n, rng);
    const KeyPair key = Keygen(params, rng);
    const Scalar x = spec.pairs[rng.Below(static_cast<unsigned long>(n)).get_ui()].x;
    const EncodedInput enc = Encode(params, key.pk, x, n, rng);

    const LookupMatrix matrix = BuildLookupMatrix(params, spec, rng);

    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
      auto start = Clock::now();
      if (config.all_ops) {
        BuildLookupMatrix(params, spec, rng);
        records.push_back({Operation::kBuild, n, bits, 0, MillisSince(start)});
        const SingleTable table = InterpolateTable(params, spec);
        ExpCounter counter;
        start = Clock::now();
        EvalSingle(enc, table, &counter);
        records.push_back({Operation::kEvalSingle, n, bits, counter.count(),
                           MillisSince(start)});
      }
      ExpCounter counter;
      start = Clock::now();
      EvalChain(enc, matrix, key.pk, rng, ChainOptions{}, &counter);
      records.push_back({Operation::kEvalChain, n, bits, counter.count(),
                         MillisSince(start)});
    }
  }
  return records;
}

std::string CsvHeader() {
  return "operation,n,group_bits,exponentiation_count,wall_time_ms";
}

std::string CsvRow(const BenchRecord& record) {
  std::ostringstream row;
  row << OperationName(record.operation) << ',' << record.n << ','
      << record.group_bits << ',' << record.exponentiation_count << ','
      << record.wall_time_ms;
  return row.str();
}

}  // namespace olt::bench
