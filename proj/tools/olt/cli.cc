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

#include "olt/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "olt/bench.h"
#include "olt/elgamal.h"
#include "olt/group.h"
#include "olt/lookup_table.h"
#include "olt/serialize.h"

namespace olt::cli {
namespace {

// Failure already mapped to an exit status.
struct Exit {
  int code;
  std::string message;
};

struct Io {
  std::ostream& out;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kIoError, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(Io& io, const std::string& path, const std::string& text) {
  if (path == "-") {
    io.out << text << '\n';
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Exit{kIoError, "cannot write " + path};
  file << text << '\n';
  if (!file) throw Exit{kIoError, "short write to " + path};
}

GroupParams LoadParams(const std::string& path) {
  GroupParams params = ParseParams(ReadFile(path));
  if (!ValidateParams(params)) {
    throw Exit{kInvalidParams, path + " is not a valid safe-prime group"};
  }
  return params;
}

GroupElem LoadPublicKey(const std::string& path, const GroupParams& params) {
  GroupElem pk = ParsePublicKey(ReadFile(path));
  if (!IsSubgroupMember(params, pk.value)) {
    throw Exit{kParamsMismatch, "public key in " + path +
                                    " does not belong to the group"};
  }
  return pk;
}

Scalar ParseScalarArg(const std::string& text, const GroupParams& params,
                      const char* what) {
  std::string_view hex = text;
  if (hex.starts_with("0x")) hex.remove_prefix(2);
  BigInt v = FromHex(hex);
  if (v >= params.q) {
    throw Exit{kInvalidArgument, std::string(what) + " must be below q"};
  }
  return Scalar(std::move(v));
}

void RequireParams(const GroupParams& expected, const GroupParams& actual,
                   const std::string& path) {
  if (!(expected == actual)) {
    throw Exit{kParamsMismatch, path + " was produced under different params"};
  }
}

bool HasMember(const std::string& text, const char* key) {
  try {
    auto j = nlohmann::json::parse(text);
    return j.is_object() && j.contains(key);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

struct Common {
  std::optional<std::uint64_t> seed;
  std::unique_ptr<RandomSource> rng() const { return MakeRandom(seed); }
};

void AddSeed(CLI::App* cmd, Common& common) {
  cmd->add_option("--seed", common.seed,
                  "Deterministic randomness seed (decimal u64)");
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return kInvalidArgument;
    case ErrorCode::kInvalidParams:
      return kInvalidParams;
    case ErrorCode::kParamsMismatch:
      return kParamsMismatch;
    case ErrorCode::kDuplicateInput:
      return kDuplicateInput;
    case ErrorCode::kSingularMatrix:
      return kSingularMatrix;
    case ErrorCode::kDimensionMismatch:
      return kDimensionMismatch;
    case ErrorCode::kInvalidMessage:
      return kInvalidMessage;
    case ErrorCode::kTableTooLarge:
      return kTableTooLarge;
    case ErrorCode::kNotClosed:
      return kNotClosed;
    case ErrorCode::kUnknownInput:
      return kUnknownInput;
    case ErrorCode::kParseError:
      return kParseFailure;
  }
  return kInternal;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Oblivious lookup tables over homomorphic ElGamal", "olt"};
  app.require_subcommand(1);
  Io io{out};

  // gen-params
  Common gen_common;
  std::optional<std::size_t> gen_bits;
  std::optional<std::string> gen_named;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("gen-params", "Generate a safe-prime group");
  auto* bits_opt = gen->add_option("--bits", gen_bits, "Modulus size in bits");
  auto* named_opt = gen->add_option("--named", gen_named, "Named group")
                        ->check(CLI::IsMember({"modp1536", "modp2048"}));
  bits_opt->excludes(named_opt);
  gen->add_option("--out", gen_out, "Output params file");
  AddSeed(gen, gen_common);

  // keygen
  Common key_common;
  std::string key_params, key_pk_out, key_sk_out;
  auto* keygen = app.add_subcommand("keygen", "Generate an ElGamal key pair");
  keygen->add_option("--params", key_params)->required();
  keygen->add_option("--pk-out", key_pk_out)->required();
  keygen->add_option("--sk-out", key_sk_out)->required();
  AddSeed(keygen, key_common);

  // build
  Common build_common;
  std::string build_params, build_spec, build_mode = "single", build_out = "-";
  auto* build = app.add_subcommand("build", "Build a lookup table from a spec");
  build->add_option("--params", build_params)->required();
  build->add_option("--spec", build_spec)->required();
  build->add_option("--mode", build_mode, "single or matrix")
      ->check(CLI::IsMember({"single", "matrix"}));
  build->add_option("--out", build_out);
  AddSeed(build, build_common);

  // encode
  Common enc_common;
  std::string enc_params, enc_pk, enc_x, enc_out = "-";
  std::size_t enc_n = 0;
  auto* encode = app.add_subcommand("encode", "Encrypt the power encoding of x");
  encode->add_option("--params", enc_params)->required();
  encode->add_option("--pk", enc_pk)->required();
  encode->add_option("--x", enc_x, "Input value (hex)")->required();
  encode->add_option("--n", enc_n, "Encoding length")->required();
  encode->add_option("--out", enc_out);
  AddSeed(encode, enc_common);

  // eval
  Common eval_common;
  std::string eval_params, eval_table, eval_input, eval_pk, eval_out = "-";
  bool eval_rerand = false;
  unsigned eval_threads = 1;
  auto* eval = app.add_subcommand("eval", "Evaluate a table on an encoding");
  eval->add_option("--params", eval_params)->required();
  eval->add_option("--table", eval_table)->required();
  eval->add_option("--input", eval_input)->required();
  eval->add_option("--pk", eval_pk)->required();
  eval->add_flag("--rerandomize", eval_rerand);
  eval->add_option("--threads", eval_threads)->check(CLI::PositiveNumber);
  eval->add_option("--out", eval_out);
  AddSeed(eval, eval_common);

  // check
  Common check_common;
  std::string check_params, check_sk, check_result, check_expected;
  auto* check = app.add_subcommand("check", "Decrypt and compare to g^y");
  check->add_option("--params", check_params)->required();
  check->add_option("--sk", check_sk)->required();
  check->add_option("--result", check_result)->required();
  check->add_option("--expected", check_expected, "Expected y (hex)")
      ->required();
  AddSeed(check, check_common);

  // bench
  Common bench_common;
  std::string bench_params, bench_out = "-";
  std::vector<std::size_t> bench_ns;
  std::size_t bench_reps = 1;
  bool bench_all = false;
  auto* bench_cmd = app.add_subcommand("bench", "Measure lookup cost");
  bench_cmd->add_option("--params", bench_params)->required();
  bench_cmd->add_option("--n", bench_ns, "Table sizes, comma separated")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--reps", bench_reps)->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--all-ops", bench_all,
                      "Also record build and eval_single rows");
  bench_cmd->add_option("--out", bench_out, "CSV output");
  AddSeed(bench_cmd, bench_common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "olt: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      GroupParams params;
      if (gen_named) {
        params = *NamedGroup(*gen_named);
      } else if (gen_bits) {
        if (*gen_bits < kMinGroupBits) {
          err << "olt: --bits must be at least " << kMinGroupBits << '\n';
          return kUsage;
        }
        params = GenerateParams(*gen_bits, *gen_common.rng());
      } else {
        err << "olt: gen-params needs --bits or --named\n";
        return kUsage;
      }
      if (!ValidateParams(params)) {
        throw Exit{kInvalidParams, "generated group failed validation"};
      }
      WriteFile(io, gen_out, SerializeParams(params));
    } else if (keygen->parsed()) {
      const GroupParams params = LoadParams(key_params);
      const KeyPair key = Keygen(params, *key_common.rng());
      WriteFile(io, key_sk_out, SerializeKeyPair(key));
      WriteFile(io, key_pk_out, SerializePublicKey(key.pk));
    } else if (build->parsed()) {
      const GroupParams params = LoadParams(build_params);
      const FunctionSpec spec = ParseSpec(ReadFile(build_spec));
      auto rng = build_common.rng();
      if (build_mode == "matrix") {
        WriteFile(io, build_out,
                  SerializeMatrix(BuildLookupMatrix(params, spec, *rng)));
      } else {
        WriteFile(io, build_out,
                  SerializeTable(BuildSingleTable(params, spec, *rng)));
      }
    } else if (encode->parsed()) {
      const GroupParams params = LoadParams(enc_params);
      const GroupElem pk = LoadPublicKey(enc_pk, params);
      const Scalar x = ParseScalarArg(enc_x, params, "--x");
      if (enc_n == 0) {
        err << "olt: --n must be at least 1\n";
        return kUsage;
      }
      WriteFile(io, enc_out,
                SerializeEncoding(Encode(params, pk, x, enc_n, *enc_common.rng())));
    } else if (eval->parsed()) {
      const GroupParams params = LoadParams(eval_params);
      const GroupElem pk = LoadPublicKey(eval_pk, params);
      const std::string table_text = ReadFile(eval_table);
      const EncodedInput enc = ParseEncoding(ReadFile(eval_input), params);
      RequireParams(params, enc.params, eval_input);
      for (const Ciphertext& c : enc.cts) {
        if (!IsValidCiphertext(params, c)) {
          throw Exit{kInvalidMessage,
                     eval_input + " holds a ciphertext outside the group"};
        }
      }
      auto rng = eval_common.rng();
      if (HasMember(table_text, "columns")) {
        const LookupMatrix matrix = ParseMatrix(table_text);
        RequireParams(params, matrix.params, eval_table);
        ChainOptions options;
        options.rerandomize = eval_rerand;
        options.threads = eval_threads;
        WriteFile(io, eval_out,
                  SerializeEncoding(EvalChain(enc, matrix, pk, *rng, options)));
      } else {
        const SingleTable table = ParseTable(table_text);
        RequireParams(params, table.params, eval_table);
        Ciphertext c = EvalSingle(enc, table);
        if (eval_rerand) c = Rerandomize(params, pk, c, *rng);
        WriteFile(io, eval_out, SerializeCiphertext(c));
      }
    } else if (check->parsed()) {
      const GroupParams params = LoadParams(check_params);
      const KeyPair parsed = ParseKeyPair(ReadFile(check_sk), params);
      const KeyPair key = KeyPairFromSecret(params, parsed.sk);
      if (!(key.pk == parsed.pk)) {
        throw Exit{kParamsMismatch, check_sk + " does not match the group"};
      }
      const Scalar y = ParseScalarArg(check_expected, params, "--expected");
      const std::string result_text = ReadFile(check_result);
      const ScalarField field(params);

      std::vector<Ciphertext> cts;
      const bool is_encoding = HasMember(result_text, "cts");
      if (is_encoding) {
        const EncodedInput enc = ParseEncoding(result_text, params);
        RequireParams(params, enc.params, check_result);
        cts = enc.cts;
      } else {
        cts.push_back(ParseCiphertext(result_text));
      }
      // A single ciphertext should hold g^y; an encoding g^(y^k) at slot k.
      const Vector exponents =
          is_encoding ? PowerVector(field, y, cts.size()) : Vector{y};
      for (std::size_t k = 0; k < cts.size(); ++k) {
        if (!(Decrypt(key, cts[k]) == GroupPow(params, exponents[k]))) {
          err << "olt: component " << k << " does not decrypt to the expected value\n";
          return kCheckFailed;
        }
      }
      out << "ok\n";
    } else if (bench_cmd->parsed()) {
      const GroupParams params = LoadParams(bench_params);
      bench::BenchConfig config{bench_ns, bench_reps, bench_all};
      const auto records = bench::RunBench(params, config, *bench_common.rng());
      std::ostringstream csv;
      csv << bench::CsvHeader();
      for (const auto& r : records) csv << '\n' << bench::CsvRow(r);
      WriteFile(io, bench_out, csv.str());
    }
  } catch (const Exit& e) {
    err << "olt: " << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << "olt: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "olt: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace olt::cli
