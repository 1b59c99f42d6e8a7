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

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>

namespace olt {

using BigInt = mpz_class;

// Source of uniform big integers. Instances are not thread-safe; give each
// thread its own.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  // Uniform in [0, bound). bound must be positive.
  virtual BigInt Below(const BigInt& bound) = 0;

  // Uniform in [lo, hi). Tests override this to inject fixed nonces.
  virtual BigInt InRange(const BigInt& lo, const BigInt& hi);

  // Uniform in [0, 2^bits).
  virtual BigInt Bits(std::size_t bits) = 0;
};

// Mersenne-twister backed generator from GMP. Deterministic for a given seed.
class GmpRandom final : public RandomSource {
 public:
  explicit GmpRandom(std::uint64_t seed);

  GmpRandom(const GmpRandom&) = delete;
  GmpRandom& operator=(const GmpRandom&) = delete;

  BigInt Below(const BigInt& bound) override;
  BigInt Bits(std::size_t bits) override;

 private:
  gmp_randclass state_;
};

// Seeded from `seed` when present, from std::random_device otherwise.
std::unique_ptr<RandomSource> MakeRandom(std::optional<std::uint64_t> seed);

}  // namespace olt
