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

#include "olt/random.h"

#include <random>

#include "olt/errors.h"

namespace olt {

BigInt RandomSource::InRange(const BigInt& lo, const BigInt& hi) {
  if (hi <= lo) {
    throw Error(ErrorCode::kInvalidArgument, "empty random range");
  }
  return lo + Below(hi - lo);
}

GmpRandom::GmpRandom(std::uint64_t seed) : state_(gmp_randinit_mt) {
  mpz_class s;
  mpz_import(s.get_mpz_t(), 1, 1, sizeof(seed), 0, 0, &seed);
  state_.seed(s);
}

BigInt GmpRandom::Below(const BigInt& bound) {
  if (bound <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "random bound must be positive");
  }
  return state_.get_z_range(bound);
}

BigInt GmpRandom::Bits(std::size_t bits) {
  if (bits == 0) return 0;
  return state_.get_z_bits(static_cast<mp_bitcnt_t>(bits));
}

// TODO: back the unseeded path with a CSPRNG (libsodium randombytes_buf)
// instead of a random_device-seeded Mersenne twister.
std::unique_ptr<RandomSource> MakeRandom(std::optional<std::uint64_t> seed) {
  if (seed) return std::make_unique<GmpRandom>(*seed);
  std::random_device device;
  std::uint64_t entropy =
      (static_cast<std::uint64_t>(device()) << 32) ^ device();
  return std::make_unique<GmpRandom>(entropy);
}

}  // namespace olt
