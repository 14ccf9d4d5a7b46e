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

#include "qgeom/purestate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qgeom/error.hpp"

namespace qgeom {

namespace {

void require_same(std::size_t a, std::size_t b) {
    if (a != b) throw Error(ErrorCode::DimensionMismatch, fmt::format("dimensions {} and {} differ", a, b));
}

double wrap_phase(double phi) {
    if (phi <= -std::numbers::pi) phi += 2.0 * std::numbers::pi;
    if (phi > std::numbers::pi) phi -= 2.0 * std::numbers::pi;
    return phi;
}

}  // namespace

PureKet::PureKet(CVector amps, const Tolerances& tol) : amps_(std::move(amps)) {
    if (amps_.size() < 2) throw Error(ErrorCode::DimensionOutOfRange, "ket needs d >= 2");
    if (!amps_.allFinite()) throw Error(ErrorCode::InvalidInput, "ket has non-finite amplitudes");
    const double err = std::abs(amps_.squaredNorm() - 1.0);
    if (err > tol.validation) throw Error(ErrorCode::InvalidInput, fmt::format("ket norm^2 off by {:.3g}", err), err);
}

DensityMatrix to_density(const PureKet& psi) {
    return DensityMatrix::trusted(psi.amps() * psi.amps().adjoint());
}

double pure_distance(const PureKet& b, const PureKet& psi) {
    require_same(b.dim(), psi.dim());
    const double overlap = std::norm(b.amps().dot(psi.amps()));
    return std::sqrt(std::max(0.0, 1.0 - overlap));
}

QubitCompletion complete_qubit_basis(const PureKet& b, const PureKet& psi) {
    require_same(b.dim(), psi.dim());
    const std::complex<double> amp_b = b.amps().dot(psi.amps());
    const double r = std::sqrt(std::max(0.0, 1.0 - std::norm(amp_b)));
    if (r <= 1e-9) throw Error(ErrorCode::CoincidentStates, "psi coincides with b up to phase", r);
    CVector a = (psi.amps() - amp_b * b.amps()) / r;
    Tolerances loose;
    loose.validation = 1e-8;
    return {PureKet(std::move(a), loose), amp_b, r};
}

std::vector<PolarEntry> column_coordinates(const PureKet& psi, const MeasurementBasis& basis) {
    require_same(psi.dim(), basis.dim());
    const CVector amps = basis.unitary().adjoint() * psi.amps();
    double reference = 0.0;
    for (Eigen::Index i = 0; i < amps.size(); ++i)
        if (std::abs(amps(i)) > 1e-12) {
            reference = std::arg(amps(i));
            break;
        }
    std::vector<PolarEntry> out;
    out.reserve(static_cast<std::size_t>(amps.size()));
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const double mag = std::abs(amps(i));
        out.push_back({mag, mag > 1e-12 ? wrap_phase(std::arg(amps(i)) - reference) : 0.0});
    }
    return out;
}

}  // namespace qgeom
