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

#include <cstddef>

namespace qgeom {

/// Numerical tolerances shared by every module. The defaults are the
/// library's contract; callers may loosen or tighten them per call.
struct Tolerances {
    /// Hermiticity, unit trace and PSD checks on input matrices.
    double validation = 1e-10;
    /// Purity / boundary / same-leaf decisions.
    double classification = 1e-9;
    /// Off-diagonal Frobenius norm at which Jacobi sweeps stop.
    double eig_offdiag = 1e-12;
    int eig_max_sweeps = 100;
    std::size_t max_dim = 64;
};

/// Applies QGEOM_TOLERANCE, QGEOM_CLASSIFY_TOLERANCE and QGEOM_MAX_DIM
/// from the environment on top of `base`. Unparsable values are ignored.
Tolerances tolerances_from_env(Tolerances base = {});

}  // namespace qgeom
