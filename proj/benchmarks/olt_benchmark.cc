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

#include <benchmark/benchmark.h>

#include "olt/bench.h"
#include "olt/lookup_table.h"

namespace {

const olt::GroupParams& Params(int bits) {
  static const olt::GroupParams p512 = [] {
    olt::GmpRandom rng(512);
    return olt::GenerateParams(512, rng);
  }();
  static const olt::GroupParams p1536 = *olt::NamedGroup("modp1536");
  return bits == 512 ? p512 : p1536;
}

struct Fixture {
  olt::KeyPair key;
  olt::LookupMatrix matrix;
  olt::SingleTable table;
  olt::EncodedInput enc;
};

Fixture MakeFixture(const olt::GroupParams& params, std::size_t n) {
  olt::GmpRandom rng(n);
  const olt::FunctionSpec spec = olt::bench::RandomClosedSpec(params, n, rng);
  olt::KeyPair key = olt::Keygen(params, rng);
  olt::EncodedInput enc = olt::Encode(params, key.pk, spec.pairs[0].x, n, rng);
  return {key, olt::BuildLookupMatrix(params, spec, rng),
          olt::InterpolateTable(params, spec), std::move(enc)};
}

void BM_EvalChain(benchmark::State& state) {
  const auto& params = Params(static_cast<int>(state.range(1)));
  const auto n = static_cast<std::size_t>(state.range(0));
  const Fixture f = MakeFixture(params, n);
  olt::GmpRandom rng(1);
  olt::ExpCounter counter;
  for (auto _ : state) {
    benchmark::DoNotOptimize(olt::EvalChain(f.enc, f.matrix, f.key.pk, rng, {}, &counter));
  }
  state.counters["modexp/iter"] = benchmark::Counter(
      static_cast<double>(counter.count()) / static_cast<double>(state.iterations()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalChain)
    ->ArgsProduct({{2, 4, 8, 16, 32}, {512}})
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);
BENCHMARK(BM_EvalChain)->Args({16, 1536})->Unit(benchmark::kMillisecond);

void BM_EvalSingle(benchmark::State& state) {
  const auto& params = Params(512);
  const Fixture f = MakeFixture(params, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(olt::EvalSingle(f.enc, f.table));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalSingle)
    ->RangeMultiplier(2)
    ->Range(2, 32)
    ->Unit(benchmark::kMicrosecond)
    ->Complexity(benchmark::oN);

void BM_BuildLookupMatrix(benchmark::State& state) {
  const auto& params = Params(512);
  const auto n = static_cast<std::size_t>(state.range(0));
  olt::GmpRandom rng(3);
  const olt::FunctionSpec spec = olt::bench::RandomClosedSpec(params, n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(olt::BuildLookupMatrix(params, spec, rng));
  }
}
BENCHMARK(BM_BuildLookupMatrix)->RangeMultiplier(2)->Range(2, 32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
