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

#include "olt/errors.h"

namespace olt {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInvalidParams:
      return "InvalidParams";
    case ErrorCode::kParamsMismatch:
      return "ParamsMismatch";
    case ErrorCode::kDuplicateInput:
      return "DuplicateInput";
    case ErrorCode::kSingularMatrix:
      return "SingularMatrix";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kInvalidMessage:
      return "InvalidMessage";
    case ErrorCode::kTableTooLarge:
      return "TableTooLarge";
    case ErrorCode::kNotClosed:
      return "NotClosed";
    case ErrorCode::kUnknownInput:
      return "UnknownInput";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace olt
