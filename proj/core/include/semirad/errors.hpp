/*
   Copyright 2026 The semirad Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SEMIRAD_ERRORS_HPP
#define SEMIRAD_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace semirad {

enum class ErrorCode {
  NotSquare,
  NotHermitian,
  NotPSD,
  NumericalFailure,
  DimensionMismatch,
  NotAAdjointable,
  NotStrictlyPositive,
  ContextMismatch,
  TOutOfRange,
  DegreeZero,
  WeightDimensionMismatch,
  NonPositiveWeight,
  NonFinite,
  InvalidInput,
};

std::string_view to_string(ErrorCode code) noexcept;

// Validation failures are the caller's fault (bad matrix, failed range
// condition); NumericalFailure is ours.
constexpr bool is_validation_error(ErrorCode code) noexcept {
  return code != ErrorCode::NumericalFailure;
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace semirad

#endif  // SEMIRAD_ERRORS_HPP
