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

#include "olt/group.h"

#include <array>

#include "olt/errors.h"

namespace olt {
namespace {

constexpr std::string_view kModp1536Hex =
    "ffffffffffffffffc90fdaa22168c234c4c6628b80dc1cd129024e088a67cc74"
    "020bbea63b139b22514a08798e3404ddef9519b3cd3a431b302b0a6df25f1437"
    "4fe1356d6d51c245e485b576625e7ec6f44c42e9a637ed6b0bff5cb6f406b7ed"
    "ee386bfb5a899fa5ae9f24117c4b1fe649286651ece45b3dc2007cb8a163bf05"
    "98da48361c55d39a69163fa8fd24cf5f83655d23dca3ad961c62f356208552bb"
    "9ed529077096966d670c354e4abc9804f1746c08ca237327ffffffffffffffff";

constexpr std::string_view kModp2048Hex =
    "ffffffffffffffffc90fdaa22168c234c4c6628b80dc1cd129024e088a67cc74"
    "020bbea63b139b22514a08798e3404ddef9519b3cd3a431b302b0a6df25f1437"
    "4fe1356d6d51c245e485b576625e7ec6f44c42e9a637ed6b0bff5cb6f406b7ed"
    "ee386bfb5a899fa5ae9f24117c4b1fe649286651ece45b3dc2007cb8a163bf05"
    "98da48361c55d39a69163fa8fd24cf5f83655d23dca3ad961c62f356208552bb"
    "9ed529077096966d670c354e4abc9804f1746c08ca18217c32905e462e36ce3b"
    "e39e772c180e86039b2783a2ec07a28fb5c55df06f4c52c9de2bcbf695581718"
    "3995497cea956ae515d2261898fa051015728e5a8aacaa68ffffffffffffffff";

GroupParams FromSafePrimeHex(std::string_view hex, unsigned long g) {
  GroupParams params;
  params.p.set_str(std::string(hex), 16);
  params.q = (params.p - 1) / 2;
  params.g = g;
  return params;
}

// Odd primes below 2048, for cheap rejection of safe-prime candidates.
const std::vector<unsigned long>& SmallPrimes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 2048;
    std::array<bool, kLimit> composite{};
    std::vector<unsigned long> out;
    for (unsigned long i = 3; i < kLimit; i += 2) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < kLimit; j += 2 * i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Rejects q when q or 2q + 1 has a small factor. Only valid for q larger
// than every sieve prime, which kMinGroupBits guarantees.
bool PassesSieve(const BigInt& q) {
  for (unsigned long r : SmallPrimes()) {
    unsigned long rem = mpz_fdiv_ui(q.get_mpz_t(), r);
    if (rem == 0 || rem == (r - 1) / 2) return false;
  }
  return true;
}

}  // namespace

BigInt PowMod(const BigInt& base, const BigInt& exp, const BigInt& modulus,
              ExpCounter* counter) {
  if (modulus <= 1) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must exceed 1");
  }
  if (exp < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  }
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(),
           modulus.get_mpz_t());
  if (counter != nullptr) counter->Add();
  return out;
}

bool IsProbablePrime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), kPrimalityRounds) != 0;
}

GroupParams GenerateParams(std::size_t bits, RandomSource& rng) {
  if (bits < kMinGroupBits) {
    throw Error(ErrorCode::kInvalidArgument,
                "group size must be at least " +
                    std::to_string(kMinGroupBits) + " bits");
  }
  // q has bits - 1 bits so that p = 2q + 1 has exactly `bits`.
  const std::size_t q_bits = bits - 1;
  const BigInt top = BigInt(1) << static_cast<mp_bitcnt_t>(q_bits - 1);
  GroupParams params;
  for (;;) {
    BigInt q = rng.Bits(q_bits - 1) | top | 1;
    if (!PassesSieve(q)) continue;
    // One cheap round on each before paying for the full test.
    if (mpz_probab_prime_p(q.get_mpz_t(), 1) == 0) continue;
    BigInt p = 2 * q + 1;
    if (mpz_probab_prime_p(p.get_mpz_t(), 1) == 0) continue;
    if (!IsProbablePrime(q) || !IsProbablePrime(p)) continue;
    params.p = std::move(p);
    params.q = std::move(q);
    break;
  }
  for (;;) {
    BigInt h = rng.InRange(2, params.p - 1);
    BigInt g = PowMod(h, 2, params.p);
    if (g != 1) {
      params.g = std::move(g);
      break;
    }
  }
  return params;
}

std::optional<GroupParams> NamedGroup(std::string_view name) {
  if (name == "modp1536") return FromSafePrimeHex(kModp1536Hex, 2);
  if (name == "modp2048") return FromSafePrimeHex(kModp2048Hex, 2);
  return std::nullopt;
}

std::vector<std::string_view> NamedGroupNames() {
  return {"modp1536", "modp2048"};
}

GroupParams TinyTestGroup() {
  return GroupParams{BigInt(23), BigInt(11), BigInt(4)};
}

bool ValidateParams(const GroupParams& params) {
  if (params.q < 2 || params.p != 2 * params.q + 1) return false;
  if (params.g <= 1 || params.g >= params.p) return false;
  if (PowMod(params.g, params.q, params.p) != 1) return false;
  return IsProbablePrime(params.q) && IsProbablePrime(params.p);
}

bool IsSubgroupMember(const GroupParams& params, const BigInt& v) {
  if (v <= 0 || v >= params.p) return false;
  return PowMod(v, params.q, params.p) == 1;
}

Scalar RandomScalar(const GroupParams& params, RandomSource& rng) {
  return Scalar(rng.Below(params.q));
}

Scalar RandomNonzeroScalar(const GroupParams& params, RandomSource& rng) {
  return Scalar(rng.InRange(1, params.q));
}

GroupElem GroupPow(const GroupParams& params, const Scalar& e,
                   ExpCounter* counter) {
  return GroupElem(PowMod(params.g, e.value, params.p, counter));
}

}  // namespace olt
