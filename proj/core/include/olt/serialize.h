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

#include <string>
#include <string_view>

#include "olt/elgamal.h"
#include "olt/lookup_table.h"

namespace olt {

// File formats. Big integers are lowercase big-endian hex without leading
// zeros ("0" for zero). Every Parse* throws Error(kParseError) on malformed
// input; values are not range-checked against a group here.
//
//   params       {"p": hex, "q": hex, "g": hex}
//   ciphertext   {"a": hex, "b": hex}
//   key pair     {"sk": hex, "pk": hex}
//   public key   {"pk": hex}
//   spec         [{"x": hex, "y": hex}, ...]
//   table        {"n": int, "params": {...}, "ell": [hex, ...]}
//   matrix       {"n": int, "params": {...}, "columns": [[hex, ...], ...]}
//   encoding     {"n": int, "params": {...}, "cts": [{"a":hex,"b":hex}, ...]}

std::string ToHex(const BigInt& v);
BigInt FromHex(std::string_view hex);

std::string SerializeParams(const GroupParams& params);
GroupParams ParseParams(std::string_view text);

std::string SerializeCiphertext(const Ciphertext& c);
Ciphertext ParseCiphertext(std::string_view text);

// The key pair file carries the secret; keep it apart from public material.
std::string SerializeKeyPair(const KeyPair& key);
// Needs params to attach; the file itself does not store them.
KeyPair ParseKeyPair(std::string_view text, const GroupParams& params);

std::string SerializePublicKey(const GroupElem& pk);
GroupElem ParsePublicKey(std::string_view text);

std::string SerializeSpec(const FunctionSpec& spec);
FunctionSpec ParseSpec(std::string_view text);

std::string SerializeTable(const SingleTable& table);
SingleTable ParseTable(std::string_view text);

std::string SerializeMatrix(const LookupMatrix& matrix);
LookupMatrix ParseMatrix(std::string_view text);

std::string SerializeEncoding(const EncodedInput& enc);
// The "params" member is optional on input; when absent the result carries
// `fallback`.
EncodedInput ParseEncoding(std::string_view text,
                           const GroupParams& fallback = {});

}  // namespace olt
