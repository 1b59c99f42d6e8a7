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

#include <gtest/gtest.h>

#include "olt/errors.h"
#include "test_util.h"

namespace olt {
namespace {

using testing::FixedRandom;
using testing::Group64;
using testing::NaivePow;

Scalar S(long v) { return Scalar(BigInt(v)); }
GroupElem E(long v) { return GroupElem(BigInt(v)); }

FunctionSpec Spec(std::initializer_list<std::pair<long, long>> pairs) {
  FunctionSpec spec;
  for (auto [x, y] : pairs) spec.pairs.push_back({S(x), S(y)});
  return spec;
}

Vector Vec(std::initializer_list<long> values) {
  Vector out;
  for (long v : values) out.push_back(S(v));
  return out;
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an olt::Error";
  return ErrorCode::kInvalidArgument;
}

std::vector<GroupElem> DecryptAll(const KeyPair& key, const EncodedInput& enc) {
  std::vector<GroupElem> out;
  for (const Ciphertext& c : enc.cts) out.push_back(Decrypt(key, c));
  return out;
}

// Plaintexts an honest encoding of x carries: g^(x^k mod q).
std::vector<GroupElem> ExpectedEncoding(const GroupParams& params,
                                        const Scalar& x, std::size_t n) {
  const ScalarField field(params);
  std::vector<GroupElem> out;
  for (const Scalar& e : PowerVector(field, x, n)) {
    out.push_back(GroupPow(params, e));
  }
  return out;
}

class TinyGroupTest : public ::testing::Test {
 protected:
  GroupParams params_ = TinyTestGroup();
  KeyPair key_ = KeyPairFromSecret(params_, S(6));
  GmpRandom rng_{42};
};

TEST_F(TinyGroupTest, BuildSingleHandVector) {
  const FunctionSpec spec = Spec({{2, 5}, {3, 7}});
  const SingleTable table = BuildSingleTable(params_, spec, rng_);
  EXPECT_EQ(table.ell, Vec({1, 2}));
  EXPECT_EQ(table.params, params_);
  const auto oracle = testing::EnumerateTables(11, {2, 3}, {5, 7});
  ASSERT_EQ(oracle.size(), 1u);
  EXPECT_EQ(oracle[0], (std::vector<std::uint64_t>{1, 2}));
}

TEST_F(TinyGroupTest, ConstantFunctionTable) {
  const FunctionSpec spec = Spec({{1, 7}, {4, 7}, {9, 7}});
  EXPECT_EQ(BuildSingleTable(params_, spec, rng_).ell, Vec({7, 0, 0}));
}

TEST_F(TinyGroupTest, SinglePointTable) {
  EXPECT_EQ(BuildSingleTable(params_, Spec({{8, 3}}), rng_).ell, Vec({3}));
}

TEST_F(TinyGroupTest, BuildMatrixSwap) {
  const LookupMatrix matrix =
      BuildLookupMatrix(params_, Spec({{2, 3}, {3, 2}}), rng_);
  ASSERT_EQ(matrix.n(), 2u);
  EXPECT_EQ(matrix.columns[0], Vec({1, 0}));
  EXPECT_EQ(matrix.columns[1], Vec({5, 10}));
  EXPECT_EQ(testing::EnumerateTables(11, {2, 3}, {3, 2}).front(),
            (std::vector<std::uint64_t>{5, 10}));
}

TEST_F(TinyGroupTest, BuildMatrixSinglePoint) {
  const LookupMatrix matrix = BuildLookupMatrix(params_, Spec({{5, 5}}), rng_);
  ASSERT_EQ(matrix.n(), 1u);
  EXPECT_EQ(matrix.columns[0], Vec({1}));
}

TEST_F(TinyGroupTest, EncodeHandVector) {
  FixedRandom rng({3, 5});
  const EncodedInput enc = Encode(params_, E(2), S(2), 2, rng);
  ASSERT_EQ(enc.n(), 2u);
  EXPECT_EQ(enc.cts[0], (Ciphertext{E(18), E(9)}));
  EXPECT_EQ(enc.cts[1], (Ciphertext{E(12), E(6)}));
  EXPECT_EQ(rng.remaining(), 0u);
}

TEST_F(TinyGroupTest, EncodeLengthOneDecryptsToGenerator) {
  for (long x = 0; x < 11; ++x) {
    const EncodedInput enc = Encode(params_, key_.pk, S(x), 1, rng_);
    ASSERT_EQ(enc.n(), 1u);
    EXPECT_EQ(Decrypt(key_, enc.cts[0]), E(4));
  }
  EXPECT_EQ(CodeOf([&] { Encode(params_, key_.pk, S(2), 0, rng_); }),
            ErrorCode::kInvalidArgument);
}

TEST_F(TinyGroupTest, EncodeComponentsMatchNaivePowers) {
  for (std::uint64_t x = 0; x < 11; ++x) {
    const EncodedInput enc = Encode(params_, key_.pk, S(x), 5, rng_);
    for (std::uint64_t k = 0; k < 5; ++k) {
      EXPECT_EQ(Decrypt(key_, enc.cts[k]).value,
                NaivePow(4, NaivePow(x, k, 11), 23));
    }
  }
}

TEST_F(TinyGroupTest, EvalSingleHandVectors) {
  const FunctionSpec spec = Spec({{2, 5}, {3, 7}});
  const SingleTable table = BuildSingleTable(params_, spec, rng_);
  ExpCounter counter;
  const Ciphertext at2 =
      EvalSingle(Encode(params_, key_.pk, S(2), 2, rng_), table, &counter);
  EXPECT_EQ(counter.count(), 4u);
  EXPECT_EQ(Decrypt(key_, at2), E(12));  // 4^5 mod 23
  const Ciphertext at3 =
      EvalSingle(Encode(params_, key_.pk, S(3), 2, rng_), table);
  EXPECT_EQ(Decrypt(key_, at3), E(8));  // 4^7 mod 23
}

TEST_F(TinyGroupTest, EvalSingleZeroTableStillPaysFullCost) {
  const SingleTable zero{Vec({0, 0, 0}), params_};
  ExpCounter counter;
  const Ciphertext c =
      EvalSingle(Encode(params_, key_.pk, S(4), 3, rng_), zero, &counter);
  EXPECT_EQ(Decrypt(key_, c), E(1));
  EXPECT_EQ(counter.count(), 6u);
}

TEST_F(TinyGroupTest, EvalSingleOutsideDomainGivesPolynomialValue) {
  // ell = (1, 2) interpolates 1 + 2x; at x = 4 that is 9.
  const SingleTable table{Vec({1, 2}), params_};
  const Ciphertext c = EvalSingle(Encode(params_, key_.pk, S(4), 2, rng_), table);
  EXPECT_EQ(Decrypt(key_, c).value, NaivePow(4, 9, 23));
  EXPECT_EQ(CodeOf([&] { PlainLookup(S(4), Spec({{2, 5}, {3, 7}}), table); }),
            ErrorCode::kUnknownInput);
}

TEST_F(TinyGroupTest, EvalSingleErrors) {
  const SingleTable table{Vec({1, 2}), params_};
  EXPECT_EQ(CodeOf([&] {
              EvalSingle(Encode(params_, key_.pk, S(2), 3, rng_), table);
            }),
            ErrorCode::kDimensionMismatch);
  const SingleTable foreign{Vec({1, 2}), Group64()};
  EXPECT_EQ(CodeOf([&] {
              EvalSingle(Encode(params_, key_.pk, S(2), 2, rng_), foreign);
            }),
            ErrorCode::kParamsMismatch);
}

TEST_F(TinyGroupTest, EvalChainSwap) {
  const LookupMatrix matrix =
      BuildLookupMatrix(params_, Spec({{2, 3}, {3, 2}}), rng_);
  const EncodedInput enc = Encode(params_, key_.pk, S(2), 2, rng_);
  ExpCounter counter;
  const EncodedInput once =
      EvalChain(enc, matrix, key_.pk, rng_, ChainOptions{}, &counter);
  EXPECT_EQ(counter.count(), 8u);
  EXPECT_EQ(DecryptAll(key_, once), (std::vector<GroupElem>{E(4), E(18)}));
  const EncodedInput twice = EvalChain(once, matrix, key_.pk, rng_);
  EXPECT_EQ(DecryptAll(key_, twice), (std::vector<GroupElem>{E(4), E(16)}));
}

TEST_F(TinyGroupTest, EvalChainIdentityIsFixedPoint) {
  const FunctionSpec spec = Spec({{1, 1}, {5, 5}, {7, 7}, {10, 10}});
  const LookupMatrix matrix = BuildLookupMatrix(params_, spec, rng_);
  for (const Mapping& m : spec.pairs) {
    const EncodedInput enc = Encode(params_, key_.pk, m.x, 4, rng_);
    EXPECT_EQ(DecryptAll(key_, EvalChain(enc, matrix, key_.pk, rng_)),
              DecryptAll(key_, enc));
  }
}

TEST_F(TinyGroupTest, PlainLookupHandVectors) {
  const FunctionSpec spec = Spec({{2, 5}, {3, 7}});
  const SingleTable table{Vec({1, 2}), params_};
  EXPECT_EQ(PlainLookup(S(2), spec, table), S(5));
  EXPECT_EQ(PlainLookup(S(3), spec, table), S(7));
  const FunctionSpec constant = Spec({{2, 6}, {3, 6}, {9, 6}});
  const SingleTable flat{Vec({6, 0, 0}), params_};
  for (const Mapping& m : constant.pairs) {
    EXPECT_EQ(PlainLookup(m.x, constant, flat), S(6));
  }
}

TEST_F(TinyGroupTest, SpecErrors) {
  EXPECT_EQ(CodeOf([&] { BuildSingleTable(params_, Spec({{2, 1}, {2, 3}}), rng_); }),
            ErrorCode::kDuplicateInput);
  EXPECT_EQ(CodeOf([&] { BuildSingleTable(params_, FunctionSpec{}, rng_); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { BuildSingleTable(params_, Spec({{2, 11}}), rng_); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { BuildLookupMatrix(params_, Spec({{2, 3}, {3, 4}}), rng_); }),
            ErrorCode::kNotClosed);
  EXPECT_EQ(CodeOf([&] { BuildLookupMatrix(params_, Spec({{2, 2}, {2, 2}}), rng_); }),
            ErrorCode::kDuplicateInput);

  FunctionSpec full;
  for (long x = 0; x < 11; ++x) full.pairs.push_back({S(x), S(x)});
  EXPECT_EQ(CodeOf([&] { BuildSingleTable(params_, full, rng_); }),
            ErrorCode::kTableTooLarge);
  EXPECT_EQ(CodeOf([&] { BuildLookupMatrix(params_, full, rng_); }),
            ErrorCode::kTableTooLarge);
  full.pairs.pop_back();
  EXPECT_NO_THROW(BuildLookupMatrix(params_, full, rng_));
}

TEST_F(TinyGroupTest, NonInjectiveSpec) {
  const FunctionSpec spec = Spec({{1, 4}, {2, 4}, {6, 9}});
  const SingleTable table = BuildSingleTable(params_, spec, rng_);
  const Ciphertext a = EvalSingle(Encode(params_, key_.pk, S(1), 3, rng_), table);
  const Ciphertext b = EvalSingle(Encode(params_, key_.pk, S(2), 3, rng_), table);
  EXPECT_EQ(Decrypt(key_, a), Decrypt(key_, b));
  EXPECT_EQ(Decrypt(key_, a).value, NaivePow(4, 4, 23));
}

TEST(LookupTableTest, UIndependenceAndInterpolation) {
  const GroupParams& params = Group64();
  GmpRandom rng(100);
  for (std::size_t n = 1; n <= 8; ++n) {
    FunctionSpec spec;
    for (std::size_t i = 0; i < n; ++i) {
      spec.pairs.push_back({Scalar(BigInt(static_cast<long>(3 * i + 1))),
                            RandomScalar(params, rng)});
    }
    GmpRandom r1(1000 + n), r2(2000 + n);
    const SingleTable t1 = BuildSingleTable(params, spec, r1);
    const SingleTable t2 = BuildSingleTable(params, spec, r2);
    EXPECT_EQ(t1.ell, t2.ell);
    EXPECT_EQ(t1.ell, InterpolateTable(params, spec).ell);
  }
}

TEST(LookupTableTest, ChainComposesOverLargerGroup) {
  const GroupParams& params = Group64();
  GmpRandom rng(7);
  const KeyPair key = Keygen(params, rng);
  const std::size_t n = 6;
  FunctionSpec spec;
  Vector xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(RandomScalar(params, rng));
  for (std::size_t i = 0; i < n; ++i) {
    spec.pairs.push_back({xs[i], xs[(i + 1) % n]});  // a 6-cycle
  }
  const LookupMatrix matrix = BuildLookupMatrix(params, spec, rng);
  EncodedInput enc = Encode(params, key.pk, xs[0], n, rng);
  for (std::size_t k = 1; k <= n; ++k) {
    enc = EvalChain(enc, matrix, key.pk, rng);
    EXPECT_EQ(DecryptAll(key, enc), ExpectedEncoding(params, xs[k % n], n));
  }
}

TEST(LookupTableTest, ParallelChainMatchesSequential) {
  const GroupParams& params = Group64();
  GmpRandom rng(9);
  const KeyPair key = Keygen(params, rng);
  FunctionSpec spec;
  for (long i = 0; i < 7; ++i) spec.pairs.push_back({S(i + 2), S((i * 3) % 7 + 2)});
  const LookupMatrix matrix = BuildLookupMatrix(params, spec, rng);
  const EncodedInput enc = Encode(params, key.pk, S(4), 7, rng);
  ExpCounter seq_count, par_count;
  const EncodedInput seq = EvalChain(enc, matrix, key.pk, rng, {}, &seq_count);
  const EncodedInput par =
      EvalChain(enc, matrix, key.pk, rng, ChainOptions{false, 3}, &par_count);
  EXPECT_EQ(seq.cts, par.cts);
  EXPECT_EQ(seq_count.count(), 2u * 49u);
  EXPECT_EQ(par_count.count(), seq_count.count());
}

TEST(LookupTableTest, RerandomizedChainOutputsAreUnlinkable) {
  const GroupParams& params = Group64();
  GmpRandom rng(10);
  const KeyPair key = Keygen(params, rng);
  const FunctionSpec spec = Spec({{2, 3}, {3, 5}, {5, 2}});
  const LookupMatrix matrix = BuildLookupMatrix(params, spec, rng);
  const EncodedInput enc = Encode(params, key.pk, S(3), 3, rng);
  const ChainOptions rerand{true, 1};
  const EncodedInput a = EvalChain(enc, matrix, key.pk, rng, rerand);
  const EncodedInput b = EvalChain(enc, matrix, key.pk, rng, rerand);
  const EncodedInput plain = EvalChain(enc, matrix, key.pk, rng);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NE(a.cts[k].a, b.cts[k].a);
    EXPECT_NE(a.cts[k].b, b.cts[k].b);
    EXPECT_NE(a.cts[k], plain.cts[k]);
  }
  EXPECT_EQ(DecryptAll(key, a), DecryptAll(key, b));
  EXPECT_EQ(DecryptAll(key, a), ExpectedEncoding(params, S(5), 3));
}

TEST(LookupTableTest, MatrixIsIndependentOfRandomness) {
  const GroupParams& params = Group64();
  const FunctionSpec spec = Spec({{2, 3}, {3, 5}, {5, 2}, {7, 7}});
  GmpRandom r1(1), r2(2);
  const LookupMatrix m1 = BuildLookupMatrix(params, spec, r1);
  const LookupMatrix m2 = BuildLookupMatrix(params, spec, r2);
  EXPECT_EQ(m1.columns, m2.columns);
}

TEST(LookupTableTest, ChainRejectsMismatches) {
  const GroupParams& params = Group64();
  GmpRandom rng(11);
  const KeyPair key = Keygen(params, rng);
  const LookupMatrix matrix = BuildLookupMatrix(params, Spec({{2, 3}, {3, 2}}), rng);
  const EncodedInput enc3 = Encode(params, key.pk, S(2), 3, rng);
  EXPECT_EQ(CodeOf([&] { EvalChain(enc3, matrix, key.pk, rng); }),
            ErrorCode::kDimensionMismatch);
  EncodedInput foreign = Encode(params, key.pk, S(2), 2, rng);
  foreign.params = TinyTestGroup();
  EXPECT_EQ(CodeOf([&] { EvalChain(foreign, matrix, key.pk, rng); }),
            ErrorCode::kParamsMismatch);
}

}  // namespace
}  // namespace olt
