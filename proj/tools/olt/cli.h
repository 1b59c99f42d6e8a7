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

#include <iosfwd>
#include <string>
#include <vector>

#include "olt/errors.h"

namespace olt::cli {

// Process exit statuses. Stable; scripts depend on them.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kIoError = 3,
  kParseFailure = 4,
  kParamsMismatch = 5,
  kInvalidParams = 6,
  kDuplicateInput = 7,
  kNotClosed = 8,
  kTableTooLarge = 9,
  kSingularMatrix = 10,
  kDimensionMismatch = 11,
  kInvalidMessage = 12,
  kUnknownInput = 13,
  kInvalidArgument = 14,
  kCheckFailed = 20,
};

int ExitCodeFor(ErrorCode code);

// Runs one verb. args[0] is the program name. Output files named "-" go to
// `out`; diagnostics go to `err` as a single line.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace olt::cli
