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

#include <complex>
#include <cstddef>
#include <vector>

#include "qgeom/config.hpp"
#include "qgeom/hermitian_eigen.hpp"

namespace qgeom {

/// A validated density matrix: Hermitian, unit trace, positive
/// semi-definite. Instances are immutable; the only ways to obtain one are
/// validate_density() and library operations that preserve validity.
class DensityMatrix {
  public:
    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const CMatrix& matrix() const { return m_; }
    std::complex<double> operator()(std::size_t i, std::size_t j) const {
        return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }

    /// For results that are valid by construction (convex combinations,
    /// unitary conjugation, diagonal projection). Re-Hermitizes exactly but
    /// performs no PSD check.
    static DensityMatrix trusted(const CMatrix& m);

    friend bool operator==(const DensityMatrix& a, const DensityMatrix& b) { return a.m_ == b.m_; }

  private:
    explicit DensityMatrix(CMatrix m) : m_(std::move(m)) {}
    CMatrix m_;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // descending, clamped at 0 within tolerance
    CMatrix eigenvectors;             // orthonormal columns
};

enum class StateClass { Pure, SurfaceMixed, Interior };
const char* to_string(StateClass c);

/// Validates `entries` against the density-matrix invariants.
/// Errors: InvalidInput (shape, non-finite), DimensionOutOfRange,
/// NotHermitian, TraceNotOne, NotPositiveSemiDefinite. Each carries the
/// worst residual.
DensityMatrix validate_density(const CMatrix& entries, const Tolerances& tol = {});

/// Tr(a b); the imaginary part must vanish to 1e-12.
double trace_product(const DensityMatrix& a, const DensityMatrix& b);
/// Tr(rho^2).
double purity(const DensityMatrix& rho);
/// sum_ij |a_ij - b_ij|^2
double frobenius_norm_sq(const DensityMatrix& a, const DensityMatrix& b);

Spectrum eig_hermitian(const DensityMatrix& rho, const Tolerances& tol = {});

struct Entropy {
    double s;  // nats, k_B = 1
    double w;  // exp(s), the entropic number of states
};
Entropy entropy_and_w(const DensityMatrix& rho, const Tolerances& tol = {});
Entropy entropy_and_w(const Spectrum& spectrum);

StateClass classify(const DensityMatrix& rho, const Tolerances& tol = {});

/// u rho u^H. Throws NotUnitary if |u^H u - I|_max exceeds tol.validation.
DensityMatrix change_basis(const DensityMatrix& rho, const CMatrix& u, const Tolerances& tol = {});

/// Throws NotUnitary (or DimensionMismatch against `dim` when nonzero).
void require_unitary(const CMatrix& u, double tol, std::size_t dim = 0);

DensityMatrix projector(const CVector& ket);
DensityMatrix diagonal_state(const std::vector<double>& probs, const Tolerances& tol = {});

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qgeom
