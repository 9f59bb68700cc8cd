// Copyright 2026 The qrecall Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qrecall/error.hpp"

namespace qrecall {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kModulusMismatch: return "modulus_mismatch";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kArityOverflow: return "arity_overflow";
    case ErrorCode::kUnsupportedKeepSet: return "unsupported_keep_set";
    case ErrorCode::kNotOrthonormal: return "not_orthonormal";
    case ErrorCode::kNotHermitian: return "not_hermitian";
    case ErrorCode::kNotPositive: return "not_positive";
    case ErrorCode::kNotUnitTrace: return "not_unit_trace";
    case ErrorCode::kOutsideDomain: return "outside_domain";
    case ErrorCode::kNotInvertible: return "not_invertible";
    case ErrorCode::kInvalidAmplitudes: return "invalid_amplitudes";
    case ErrorCode::kOutcomeImpossible: return "outcome_impossible";
    case ErrorCode::kNonFlatBasis: return "non_flat_basis";
    case ErrorCode::kDimensionTooLarge: return "dimension_too_large";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace qrecall
