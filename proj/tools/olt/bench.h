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
#include <cstdint>
#include <string>
#include <vector>

#include "olt/lookup_table.h"

namespace olt::bench {

enum class Operation { kBuild, kEvalSingle, kEvalChain };

std::string_view OperationName(Operation op);

struct BenchRecord {
  Operation operation;
  std::size_t n;
  std::size_t group_bits;
  std::uint64_t exponentiation_count;
  double wall_time_ms;
};

struct BenchConfig {
  std::vector<std::size_t> ns;
  std::size_t repetitions = 1;
  // Also time table construction and a single-table evaluation.
  bool all_ops = false;
};

// n distinct random points with f(x_i) drawn uniformly from the points.
FunctionSpec RandomClosedSpec(const GroupParams& params, std::size_t n,
                              RandomSource& rng);

// For each n: random closed f, random encoded member of X, then
// `repetitions` timed eval_chain runs (one record each). Repetitions run
// sequentially. Throws kTableTooLarge if some n >= q.
std::vector<BenchRecord> RunBench(const GroupParams& params,
                                  const BenchConfig& config, RandomSource& rng);

std::string CsvHeader();
std::string CsvRow(const BenchRecord& record);

}  // namespace olt::bench
