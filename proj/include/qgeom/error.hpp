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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgeom {

enum class ErrorCode {
    ParseError,
    InvalidInput,
    NotHermitian,
    TraceNotOne,
    NotPositiveSemiDefinite,
    NotUnitary,
    DimensionMismatch,
    DimensionOutOfRange,
    ConvergenceFailure,
    ZeroStatevector,
    BadWeights,
    CoincidentEndpoints,
    CoincidentStates,
    NegativeTime,
    EmptyRecord,
    BadOrdering,
    WrongDimension,
};

std::string_view to_string(ErrorCode code);

/// Every domain failure in the library is reported as an Error. `residual`
/// carries the worst violation when one exists (e.g. the most negative
/// eigenvalue for NotPositiveSemiDefinite), otherwise 0.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message, double residual = 0.0);

    ErrorCode code() const noexcept { return code_; }
    double residual() const noexcept { return residual_; }

    /// Malformed input, as opposed to well-formed input violating the math.
    bool is_malformed_input() const noexcept {
        return code_ == ErrorCode::ParseError || code_ == ErrorCode::InvalidInput;
    }

  private:
    ErrorCode code_;
    double residual_;
};

}  // namespace qgeom
