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

#include <vector>

#include <Eigen/Dense>

namespace qgeom {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

struct HermitianEigen {
    std::vector<double> values;  // descending
    CMatrix vectors;             // column k pairs with values[k]
    int sweeps = 0;
};

struct JacobiOptions {
    double offdiag_tol = 1e-12;
    int max_sweeps = 100;
    /// Eigenvalues closer than this are a degenerate cluster whose basis
    /// is canonicalized.
    double tie_tol = 1e-9;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix. Only the
/// upper triangle is read. Output is deterministic: eigenvalues descending,
/// degenerate eigenspaces spanned by Gram-Schmidt on the projected unit
/// vectors e_0, e_1, ... in order, every column phase-fixed so its first
/// component above 1e-9 in magnitude is real and positive.
///
/// Throws Error{ConvergenceFailure} when `max_sweeps` sweeps do not bring
/// the off-diagonal norm under `offdiag_tol * max(1, |A|_F)`.
HermitianEigen hermitian_eigen(const CMatrix& a, const JacobiOptions& options = {});

/// Rotates column `v` by a global phase so that its first component with
/// magnitude above `threshold` is real-positive.
void fix_phase(Eigen::Ref<CVector> v, double threshold = 1e-9);

}  // namespace qgeom
