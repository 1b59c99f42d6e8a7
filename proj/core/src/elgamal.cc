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

#include "olt/elgamal.h"

#include "olt/errors.h"

namespace olt {
namespace {

BigInt MulMod(const BigInt& x, const BigInt& y, const BigInt& p) {
  BigInt r = x * y;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  return r;
}

}  // namespace

KeyPair Keygen(const GroupParams& params, RandomSource& rng,
               ExpCounter* counter) {
  Scalar sk = RandomNonzeroScalar(params, rng);
  GroupElem pk = GroupPow(params, sk, counter);
  return KeyPair{std::move(sk), std::move(pk), params};
}

KeyPair KeyPairFromSecret(const GroupParams& params, const Scalar& sk) {
  if (sk.value < 1 || sk.value >= params.q) {
    throw Error(ErrorCode::kInvalidArgument, "secret key outside [1, q)");
  }
  return KeyPair{sk, GroupPow(params, sk), params};
}

Ciphertext Encrypt(const GroupParams& params, const GroupElem& pk,
                   const GroupElem& m, RandomSource& rng,
                   ExpCounter* counter) {
  if (!IsSubgroupMember(params, m.value)) {
    throw Error(ErrorCode::kInvalidMessage,
                "plaintext " + m.value.get_str(16) + " not in subgroup");
  }
  return EncryptWithNonce(params, pk, m, RandomNonzeroScalar(params, rng),
                          counter);
}

Ciphertext EncryptWithNonce(const GroupParams& params, const GroupElem& pk,
                            const GroupElem& m, const Scalar& r,
                            ExpCounter* counter) {
  GroupElem a = GroupPow(params, r, counter);
  GroupElem b(MulMod(m.value, PowMod(pk.value, r.value, params.p, counter),
                     params.p));
  return Ciphertext{std::move(a), std::move(b)};
}

GroupElem Decrypt(const KeyPair& key, const Ciphertext& c,
                  ExpCounter* counter) {
  const BigInt& p = key.params.p;
  BigInt shared = PowMod(c.a.value, key.sk.value, p, counter);
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), shared.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "malformed ciphertext");
  }
  return GroupElem(MulMod(c.b.value, inv, p));
}

Ciphertext CtMul(const GroupParams& params, const Ciphertext& x,
                 const Ciphertext& y) {
  return Ciphertext{GroupElem(MulMod(x.a.value, y.a.value, params.p)),
                    GroupElem(MulMod(x.b.value, y.b.value, params.p))};
}

Ciphertext CtPow(const GroupParams& params, const Ciphertext& c,
                 const Scalar& e, ExpCounter* counter) {
  return Ciphertext{GroupElem(PowMod(c.a.value, e.value, params.p, counter)),
                    GroupElem(PowMod(c.b.value, e.value, params.p, counter))};
}

Ciphertext Rerandomize(const GroupParams& params, const GroupElem& pk,
                       const Ciphertext& c, RandomSource& rng,
                       ExpCounter* counter) {
  Ciphertext one = EncryptWithNonce(params, pk, GroupElem(BigInt(1)),
                                    RandomNonzeroScalar(params, rng), counter);
  return CtMul(params, c, one);
}

bool IsValidCiphertext(const GroupParams& params, const Ciphertext& c) {
  return IsSubgroupMember(params, c.a.value) &&
         IsSubgroupMember(params, c.b.value);
}

}  // namespace olt
