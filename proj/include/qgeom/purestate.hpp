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
#include <vector>

#include "qgeom/densmat.hpp"
#include "qgeom/leaves.hpp"
#include "qgeom/measurement.hpp"

namespace qgeom {

/// A normalized state vector.
class PureKet {
  public:
    /// Throws InvalidInput unless sum |a_i|^2 = 1 to tol.validation and d >= 2.
    explicit PureKet(CVector amps, const Tolerances& tol = {});

    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    const CVector& amps() const { return amps_; }

  private:
    CVector amps_;
};

/// |psi><psi|
DensityMatrix to_density(const PureKet& psi);

/// sqrt(1 - |<b|psi>|^2): statespace distance between two pure states.
double pure_distance(const PureKet& b, const PureKet& psi);

struct QubitCompletion {
    PureKet a;                    // orthogonal to b, in the plane of b and psi
    std::complex<double> amp_b;   // <b|psi>
    double amp_a;                 // pure_distance(b, psi)
};

/// |a> = (|psi> - <b|psi>|b>) / r, so that psi = r|a> + <b|psi>|b>.
/// CoincidentStates when r <= 1e-9.
QubitCompletion complete_qubit_basis(const PureKet& b, const PureKet& psi);

/// Polar amplitudes <B_i|psi>, global phase chosen so the first
/// component with magnitude above 1e-12 has phase 0.
std::vector<PolarEntry> column_coordinates(const PureKet& psi, const MeasurementBasis& basis);

}  // namespace qgeom
