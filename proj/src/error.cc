// Copyright 2026 The extractorlab Authors.
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

#include "extractorlab/error.h"

namespace extractorlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCompositeModulus:
      return "CompositeModulus";
    case ErrorCode::kEvenModulus:
      return "EvenModulus";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kUniverseTooLarge:
      return "UniverseTooLarge";
    case ErrorCode::kSetTooLarge:
      return "SetTooLarge";
    case ErrorCode::kRoundingUnstable:
      return "RoundingUnstable";
    case ErrorCode::kEmptySupport:
      return "EmptySupport";
    case ErrorCode::kNoIsotropicDirection:
      return "NoIsotropicDirection";
    case ErrorCode::kInvalidExponent:
      return "InvalidExponent";
    case ErrorCode::kNotADistribution:
      return "NotADistribution";
    case ErrorCode::kInadmissibleField:
      return "InadmissibleField";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInvariantViolation:
      return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace extractorlab
