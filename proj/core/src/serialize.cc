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

#include "olt/serialize.h"

#include <json.hpp>

#include "olt/errors.h"

namespace olt {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(e.what());
  }
}

const json& Member(const json& obj, const char* key) {
  if (!obj.is_object()) Fail(std::string("expected an object holding \"") + key + "\"");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(std::string("missing member \"") + key + "\"");
  return *it;
}

BigInt HexValue(const json& v) {
  if (!v.is_string()) Fail("expected a hex string");
  return FromHex(v.get<std::string>());
}

std::size_t CountValue(const json& v) {
  if (!v.is_number_unsigned()) Fail("expected a non-negative integer");
  return v.get<std::size_t>();
}

const json& ArrayValue(const json& v) {
  if (!v.is_array()) Fail("expected an array");
  return v;
}

json ParamsJson(const GroupParams& params) {
  return json{{"p", ToHex(params.p)}, {"q", ToHex(params.q)},
              {"g", ToHex(params.g)}};
}

GroupParams ParamsFromJson(const json& j) {
  return GroupParams{HexValue(Member(j, "p")), HexValue(Member(j, "q")),
                     HexValue(Member(j, "g"))};
}

json CiphertextJson(const Ciphertext& c) {
  return json{{"a", ToHex(c.a.value)}, {"b", ToHex(c.b.value)}};
}

Ciphertext CiphertextFromJson(const json& j) {
  return Ciphertext{GroupElem(HexValue(Member(j, "a"))),
                    GroupElem(HexValue(Member(j, "b")))};
}

json VectorJson(const Vector& v) {
  json out = json::array();
  for (const Scalar& s : v) out.push_back(ToHex(s.value));
  return out;
}

Vector VectorFromJson(const json& j) {
  Vector out;
  for (const json& e : ArrayValue(j)) out.emplace_back(HexValue(e));
  return out;
}

void CheckCount(const json& j, std::size_t actual) {
  if (CountValue(Member(j, "n")) != actual) {
    Fail("\"n\" disagrees with the number of entries");
  }
}

}  // namespace

std::string ToHex(const BigInt& v) {
  if (v < 0) throw Error(ErrorCode::kInvalidArgument, "negative value");
  return v.get_str(16);
}

BigInt FromHex(std::string_view hex) {
  if (hex.empty()) Fail("empty hex string");
  if (hex.size() > 1 && hex.front() == '0') Fail("hex has leading zeros");
  for (char c : hex) {
    const bool digit = c >= '0' && c <= '9';
    const bool lower = c >= 'a' && c <= 'f';
    if (!digit && !lower) Fail("invalid hex digit in \"" + std::string(hex) + "\"");
  }
  return BigInt(std::string(hex), 16);
}

std::string SerializeParams(const GroupParams& params) {
  return ParamsJson(params).dump();
}

GroupParams ParseParams(std::string_view text) {
  return ParamsFromJson(Parse(text));
}

std::string SerializeCiphertext(const Ciphertext& c) {
  return CiphertextJson(c).dump();
}

Ciphertext ParseCiphertext(std::string_view text) {
  return CiphertextFromJson(Parse(text));
}

std::string SerializeKeyPair(const KeyPair& key) {
  return json{{"sk", ToHex(key.sk.value)}, {"pk", ToHex(key.pk.value)}}.dump();
}

KeyPair ParseKeyPair(std::string_view text, const GroupParams& params) {
  const json j = Parse(text);
  return KeyPair{Scalar(HexValue(Member(j, "sk"))),
                 GroupElem(HexValue(Member(j, "pk"))), params};
}

std::string SerializePublicKey(const GroupElem& pk) {
  return json{{"pk", ToHex(pk.value)}}.dump();
}

GroupElem ParsePublicKey(std::string_view text) {
  return GroupElem(HexValue(Member(Parse(text), "pk")));
}

std::string SerializeSpec(const FunctionSpec& spec) {
  json out = json::array();
  for (const Mapping& m : spec.pairs) {
    out.push_back(json{{"x", ToHex(m.x.value)}, {"y", ToHex(m.y.value)}});
  }
  return out.dump();
}

FunctionSpec ParseSpec(std::string_view text) {
  const json j = Parse(text);
  FunctionSpec spec;
  for (const json& e : ArrayValue(j)) {
    spec.pairs.push_back(Mapping{Scalar(HexValue(Member(e, "x"))),
                                 Scalar(HexValue(Member(e, "y")))});
  }
  return spec;
}

std::string SerializeTable(const SingleTable& table) {
  return json{{"n", table.n()},
              {"params", ParamsJson(table.params)},
              {"ell", VectorJson(table.ell)}}
      .dump();
}

SingleTable ParseTable(std::string_view text) {
  const json j = Parse(text);
  SingleTable table{VectorFromJson(Member(j, "ell")),
                    ParamsFromJson(Member(j, "params"))};
  CheckCount(j, table.n());
  return table;
}

std::string SerializeMatrix(const LookupMatrix& matrix) {
  json columns = json::array();
  for (const Vector& c : matrix.columns) columns.push_back(VectorJson(c));
  return json{{"n", matrix.n()},
              {"params", ParamsJson(matrix.params)},
              {"columns", std::move(columns)}}
      .dump();
}

LookupMatrix ParseMatrix(std::string_view text) {
  const json j = Parse(text);
  LookupMatrix matrix{{}, ParamsFromJson(Member(j, "params"))};
  for (const json& c : ArrayValue(Member(j, "columns"))) {
    matrix.columns.push_back(VectorFromJson(c));
  }
  CheckCount(j, matrix.n());
  for (const Vector& c : matrix.columns) {
    if (c.size() != matrix.n()) Fail("lookup matrix columns must have length n");
  }
  return matrix;
}

std::string SerializeEncoding(const EncodedInput& enc) {
  json cts = json::array();
  for (const Ciphertext& c : enc.cts) cts.push_back(CiphertextJson(c));
  return json{{"n", enc.n()},
              {"params", ParamsJson(enc.params)},
              {"cts", std::move(cts)}}
      .dump();
}

EncodedInput ParseEncoding(std::string_view text, const GroupParams& fallback) {
  const json j = Parse(text);
  EncodedInput enc{{}, fallback};
  if (j.is_object() && j.contains("params")) {
    enc.params = ParamsFromJson(j["params"]);
  }
  for (const json& c : ArrayValue(Member(j, "cts"))) {
    enc.cts.push_back(CiphertextFromJson(c));
  }
  CheckCount(j, enc.n());
  return enc;
}

}  // namespace olt
