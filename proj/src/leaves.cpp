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

#include "qgeom/leaves.hpp"

#include <cmath>
#include <numbers>

#include "qgeom/embedding.hpp"
#include "qgeom/statevectors.hpp"

namespace qgeom {

double LeafCoordinates::radius() const {
    double s = 0.0;
    for (const PolarEntry& e : offdiag) s += e.magnitude * e.magnitude;
    return std::sqrt(s);
}

DensityMatrix project_to_simplex(const DensityMatrix& rho) {
    const CMatrix diag = rho.matrix().diagonal().real().cast<std::complex<double>>().asDiagonal();
    return DensityMatrix::trusted(diag);
}

LeafCoordinates leaf_coordinates(const DensityMatrix& rho, const Tolerances& tol) {
    const std::size_t d = rho.dim();
    std::vector<double> diag(d);
    for (std::size_t i = 0; i < d; ++i) diag[i] = rho(i, i).real();

    LeafCoordinates out{make_probability_vector(std::move(diag), tol), {}};
    out.offdiag.reserve(d * (d - 1) / 2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const std::complex<double> z = rho(i, j);
            const double mag = std::abs(z);
            // std::arg is in [-pi, pi]; fold -pi onto pi.
            double phase = mag == 0.0 ? 0.0 : std::arg(z);
            if (phase == -std::numbers::pi) phase = std::numbers::pi;
            out.offdiag.push_back({mag, phase});
        }
    return out;
}

double leaf_radius(const DensityMatrix& rho) {
    const std::size_t d = rho.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) s += std::norm(rho(i, j));
    return std::sqrt(s);
}

bool same_leaf(const DensityMatrix& a, const DensityMatrix& b, const Tolerances& tol) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (std::abs(a(i, i).real() - b(i, i).real()) > tol.classification) return false;
    return true;
}

LeafDecomposition leaf_decomposition(const DensityMatrix& rho) {
    const DensityMatrix center = maximally_mixed(rho.dim());
    const DensityMatrix foot = project_to_simplex(rho);
    return {distance(foot, center), distance(rho, foot), distance(rho, center)};
}

}  // namespace qgeom
