// Copyright 2026 The qgeom Authors
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

#include "qgeom/error.hpp"

namespace qgeom {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::TraceNotOne: return "TraceNotOne";
        case ErrorCode::NotPositiveSemiDefinite: return "NotPositiveSemiDefinite";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DimensionOutOfRange: return "DimensionOutOfRange";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::ZeroStatevector: return "ZeroStatevector";
        case ErrorCode::BadWeights: return "BadWeights";
        case ErrorCode::CoincidentEndpoints: return "CoincidentEndpoints";
        case ErrorCode::CoincidentStates: return "CoincidentStates";
        case ErrorCode::NegativeTime: return "NegativeTime";
        case ErrorCode::EmptyRecord: return "EmptyRecord";
        case ErrorCode::BadOrdering: return "BadOrdering";
        case ErrorCode::WrongDimension: return "WrongDimension";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, double residual)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      residual_(residual) {}

}  // namespace qgeom
