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

#include "hypershare/error.hpp"

namespace hypershare {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage: return "Usage";
    case ErrorCode::kFormat: return "FormatError";
    case ErrorCode::kNotQualified: return "NotQualified";
    case ErrorCode::kCoverFailure: return "CoverFailure";
    case ErrorCode::kPartitionFailure: return "PartitionFailure";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::kFieldTooSmall: return "FieldTooSmall";
    case ErrorCode::kTargetSelectionFailure: return "TargetSelectionFailure";
    case ErrorCode::kInfeasibleCount: return "InfeasibleCount";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kRange: return "RangeError";
    case ErrorCode::kSizeOverflow: return "SizeOverflow";
    case ErrorCode::kDegreeOverflow: return "DegreeOverflow";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace hypershare
