// Copyright 2026 The Hypershare Authors
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

#include <stdexcept>
#include <string>

namespace hypershare {

// Failure categories. The numeric values of the first block double as the
// CLI exit codes and the C API status codes.
enum class ErrorCode : int {
  kUsage = 1,
  kFormat = 2,
  kNotQualified = 3,
  kCoverFailure = 4,
  kPartitionFailure = 5,
  kEnumerationTooLarge = 6,
  kFieldTooSmall = 7,
  kTargetSelectionFailure = 8,
  kInfeasibleCount = 9,
  kNotPrime = 10,
  kDivisionByZero = 11,
  kRange = 12,
  kSizeOverflow = 13,
  kDegreeOverflow = 14,
  kFieldMismatch = 15,
  kDuplicatePoint = 16,
  kIo = 17,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace hypershare
