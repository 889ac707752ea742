// Copyright 2026 The pwclock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pwclock/error.hpp"

namespace pwclock {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOverDamped: return "OverDamped";
    case ErrorCode::kResetTooLate: return "ResetTooLate";
    case ErrorCode::kNonPositiveAmplitude: return "NonPositiveAmplitude";
    case ErrorCode::kNonPositiveScale: return "NonPositiveScale";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kDimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidAbstractTime: return "InvalidAbstractTime";
    case ErrorCode::kNonPositiveTime: return "NonPositiveTime";
    case ErrorCode::kUnderDampingViolated: return "UnderDampingViolated";
    case ErrorCode::kNegativeRadicand: return "NegativeRadicand";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kNonMonotonicWindow: return "NonMonotonicWindow";
    case ErrorCode::kZeroDamping: return "ZeroDamping";
    case ErrorCode::kDegenerateSupport: return "DegenerateSupport";
    case ErrorCode::kNotAProjector: return "NotAProjector";
    case ErrorCode::kEigenFailure: return "EigenFailure";
    case ErrorCode::kInvalidGrid: return "InvalidGrid";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kNoValues: return "NoValues";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace pwclock
