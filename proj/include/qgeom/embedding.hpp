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
#include <memory>
#include <vector>

#include "qgeom/densmat.hpp"

namespace qgeom {

/// Generalized Gell-Mann generators normalized to Tr(l_j l_k) = 2 delta_jk.
///
/// Ordering (frozen, serialized coordinates depend on it):
///   1. symmetric   E_jk + E_kj        for (j,k), j<k, row-major
///   2. antisymmetric -i E_jk + i E_kj  for (j,k), j<k, row-major
///   3. diagonal    sqrt(2/(l(l+1))) diag(1,..,1,-l,0,..), l = 1..d-1
/// For d = 2 this is (sigma_x, sigma_y, sigma_z).
struct GeneratorBasis {
    std::size_t dim = 0;
    std::vector<CMatrix> generators;
};

GeneratorBasis generator_basis(std::size_t d, const Tolerances& tol = {});

/// Process-wide read-only memo of generator_basis(d).
std::shared_ptr<const GeneratorBasis> cached_generator_basis(std::size_t d);

/// Generalized Bloch vector: coordinates relative to I/d, scaled so that
/// the Euclidean distance between points is the statespace metric.
struct StatePoint {
    std::size_t dim = 0;
    RVector coords;
};

/// coords_k = 1/2 Tr(rho l_k).
StatePoint to_statepoint(const DensityMatrix& rho);

/// rho = I/d + sum_k c_k l_k. NotPositiveSemiDefinite when the point is
/// outside the statespace; DimensionMismatch on a wrong coordinate count.
DensityMatrix from_statepoint(const StatePoint& p, const Tolerances& tol = {});

/// sqrt(1/2 Tr((a - b)^2)), the basis-independent statespace distance.
double distance(const DensityMatrix& a, const DensityMatrix& b);

/// The same metric in its three-term form
/// sqrt(1/2 Tr a^2 + 1/2 Tr b^2 - Tr ab), clamped at 0.
double distance_trace_expanded(const DensityMatrix& a, const DensityMatrix& b);

/// sqrt(1/2 Tr rho^2): length of the statevector from the
/// infinite-dimensional maximally mixed origin.
double origin_radius(const DensityMatrix& rho);

/// Angle at the infinite-dimensional origin between the statevectors of a
/// and b: arccos(Tr(ab) / (2 r_a r_b)), argument clamped to [-1, 1].
double angle(const DensityMatrix& a, const DensityMatrix& b);

/// Zero-pads `rho` into a larger dimension (nesting of statespaces).
DensityMatrix embed_in_dimension(const DensityMatrix& rho, std::size_t d);

}  // namespace qgeom
