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
#include <vector>

#include "qgeom/densmat.hpp"
#include "qgeom/simplex.hpp"

namespace qgeom {

/// An orthonormal measurement basis; column i is |B_i>.
class MeasurementBasis {
  public:
    /// Throws NotUnitary unless `vectors` is unitary to tol.validation.
    explicit MeasurementBasis(CMatrix vectors, const Tolerances& tol = {});

    static MeasurementBasis computational(std::size_t d);

    std::size_t dim() const { return static_cast<std::size_t>(u_.rows()); }
    const CMatrix& unitary() const { return u_; }
    CVector vector(std::size_t i) const { return u_.col(static_cast<Eigen::Index>(i)); }

  private:
    CMatrix u_;
};

/// Eigenbases of sigma_z, sigma_x, sigma_y, in that order.
std::vector<MeasurementBasis> pauli_bases();

/// p_i = <B_i| rho |B_i>
ProbabilityVector measure_probabilities(const DensityMatrix& rho, const MeasurementBasis& basis);

/// Uniform exponential damping of the off-diagonal elements in `basis`:
/// rho_ij -> rho_ij exp(-gamma t) for i != j. t = +inf gives the
/// projection onto the basis simplex. NegativeTime for t < 0 or NaN.
DensityMatrix decohere(const DensityMatrix& rho, const MeasurementBasis& basis, double t, double gamma = 1.0);

struct TomographyRecord {
    std::vector<MeasurementBasis> bases;
    std::vector<ProbabilityVector> diag_data;  // one per basis
};

/// Exact diagonal data of `rho` in each basis.
TomographyRecord simulate_record(const DensityMatrix& rho, const std::vector<MeasurementBasis>& bases);

/// Informationally complete default bases: the Pauli bases for d = 2;
/// for d >= 3, d + 1 Haar bases from a fixed-seed generator, checked for
/// full rank d^2 - 1.
std::vector<MeasurementBasis> default_tomography_bases(std::size_t d);

struct Reconstruction {
    DensityMatrix rho;
    double residual;  // least-squares misfit + PSD projection distance
};

/// Least-squares inversion over the generalized Bloch coordinates with a
/// minimum-norm solution when the record is not informationally complete,
/// followed by projection onto the PSD cone.
/// Errors: EmptyRecord, DimensionMismatch.
Reconstruction reconstruct(const TomographyRecord& record, const Tolerances& tol = {});

/// Rank of the linear map from Bloch coordinates to the record's data.
std::size_t tomography_rank(const std::vector<MeasurementBasis>& bases);

}  // namespace qgeom
