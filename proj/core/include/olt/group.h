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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "olt/random.h"

namespace olt {

// Counts modular exponentiations. One counter belongs to one measurement
// context; increments are atomic so parallel workers of that context can
// share it.
class ExpCounter {
 public:
  ExpCounter() = default;
  ExpCounter(const ExpCounter&) = delete;
  ExpCounter& operator=(const ExpCounter&) = delete;

  void Add(std::uint64_t k = 1) noexcept {
    count_.fetch_add(k, std::memory_order_relaxed);
  }
  std::uint64_t count() const noexcept {
    return count_.load(std::memory_order_relaxed);
  }
  void Reset() noexcept { count_.store(0, std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> count_{0};
};

// base^exp mod modulus for exp >= 0, modulus > 1. Bumps `counter` by one.
BigInt PowMod(const BigInt& base, const BigInt& exp, const BigInt& modulus,
              ExpCounter* counter = nullptr);

// Element of the exponent field Z_q. Reduction is the caller's job; every
// constructor in this library that produces one returns it reduced.
struct Scalar {
  BigInt value;

  Scalar() = default;
  explicit Scalar(BigInt v) : value(std::move(v)) {}

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value == b.value;
  }
};

// Element of the order-q subgroup of Z_p^*.
struct GroupElem {
  BigInt value;

  GroupElem() = default;
  explicit GroupElem(BigInt v) : value(std::move(v)) {}

  friend bool operator==(const GroupElem& a, const GroupElem& b) {
    return a.value == b.value;
  }
};

// Safe-prime group: p = 2q + 1 with p, q prime and g generating the
// subgroup of quadratic residues, which has order q.
struct GroupParams {
  BigInt p;
  BigInt q;
  BigInt g;

  std::size_t bits() const { return mpz_sizeinbase(p.get_mpz_t(), 2); }

  friend bool operator==(const GroupParams& a, const GroupParams& b) {
    return a.p == b.p && a.q == b.q && a.g == b.g;
  }
};

inline constexpr std::size_t kMinGroupBits = 16;

// Miller-Rabin rounds for every primality decision (error <= 4^-64).
inline constexpr int kPrimalityRounds = 64;

bool IsProbablePrime(const BigInt& n);

// Draws a fresh safe-prime group with a `bits`-bit modulus and
// g = h^2 mod p for uniform h, rejecting g = 1. Throws kInvalidArgument
// when bits < kMinGroupBits.
GroupParams GenerateParams(std::size_t bits, RandomSource& rng);

// RFC 3526 MODP groups ("modp1536", "modp2048") with generator 2.
std::optional<GroupParams> NamedGroup(std::string_view name);
std::vector<std::string_view> NamedGroupNames();

// The (23, 11, 4) group used for hand-checkable vectors.
GroupParams TinyTestGroup();

bool ValidateParams(const GroupParams& params);

// 0 < v < p and v^q = 1 mod p.
bool IsSubgroupMember(const GroupParams& params, const BigInt& v);

// Uniform in [0, q).
Scalar RandomScalar(const GroupParams& params, RandomSource& rng);
// Uniform in [1, q).
Scalar RandomNonzeroScalar(const GroupParams& params, RandomSource& rng);

// g^e mod p.
GroupElem GroupPow(const GroupParams& params, const Scalar& e,
                   ExpCounter* counter = nullptr);

}  // namespace olt
