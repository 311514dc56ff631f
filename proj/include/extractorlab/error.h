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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace extractorlab {

enum class ErrorCode {
  kCompositeModulus,
  kEvenModulus,
  kDimensionMismatch,
  kUniverseTooLarge,
  kSetTooLarge,
  kRoundingUnstable,
  kEmptySupport,
  kNoIsotropicDirection,
  kInvalidExponent,
  kNotADistribution,
  kInadmissibleField,
  kInvalidArgument,
  // A mathematical identity or bound checked at run time failed.
  kInvariantViolation,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // True for the resource-cap family (UniverseTooLarge, SetTooLarge).
  bool is_cap_violation() const noexcept {
    return code_ == ErrorCode::kUniverseTooLarge ||
           code_ == ErrorCode::kSetTooLarge;
  }

 private:
  ErrorCode code_;
};

}  // namespace extractorlab
