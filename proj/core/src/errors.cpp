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

#include "semirad/errors.hpp"

namespace semirad {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAAdjointable: return "NotAAdjointable";
    case ErrorCode::NotStrictlyPositive: return "NotStrictlyPositive";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::TOutOfRange: return "TOutOfRange";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::WeightDimensionMismatch: return "WeightDimensionMismatch";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace semirad
