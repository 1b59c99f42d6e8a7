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
#include "olt/random.h"

namespace olt {

// ElGamal ciphertext (g^r, m * pk^r).
struct Ciphertext {
  GroupElem a;
  GroupElem b;

  friend bool operator==(const Ciphertext& x, const Ciphertext& y) {
    return x.a == y.a && x.b == y.b;
  }
};

struct KeyPair {
  Scalar sk;
  GroupElem pk;
  GroupParams params;
};

KeyPair Keygen(const GroupParams& params, RandomSource& rng,
               ExpCounter* counter = nullptr);

// Rebuilds a key pair from a known secret. Throws kInvalidArgument unless
// 1 <= sk < q.
KeyPair KeyPairFromSecret(const GroupParams& params, const Scalar& sk);

// Encrypts a subgroup element under a fresh nonce in [1, q). Throws
// kInvalidMessage if m is not in the order-q subgroup.
Ciphertext Encrypt(const GroupParams& params, const GroupElem& pk,
                   const GroupElem& m, RandomSource& rng,
                   ExpCounter* counter = nullptr);

// Encryption with a caller-chosen nonce; r = 0 yields the trivial
// ciphertext (1, m).
Ciphertext EncryptWithNonce(const GroupParams& params, const GroupElem& pk,
                            const GroupElem& m, const Scalar& r,
                            ExpCounter* counter = nullptr);

// b * (a^sk)^-1 mod p.
GroupElem Decrypt(const KeyPair& key, const Ciphertext& c,
                  ExpCounter* counter = nullptr);

// Component-wise product; encrypts the product of the plaintexts.
Ciphertext CtMul(const GroupParams& params, const Ciphertext& x,
                 const Ciphertext& y);

// (a^e, b^e); encrypts m^e. Always two exponentiations, including e = 0.
Ciphertext CtPow(const GroupParams& params, const Ciphertext& c,
                 const Scalar& e, ExpCounter* counter = nullptr);

// c * Encrypt(1) under a fresh nonce.
Ciphertext Rerandomize(const GroupParams& params, const GroupElem& pk,
                       const Ciphertext& c, RandomSource& rng,
                       ExpCounter* counter = nullptr);

bool IsValidCiphertext(const GroupParams& params, const Ciphertext& c);

}  // namespace olt
