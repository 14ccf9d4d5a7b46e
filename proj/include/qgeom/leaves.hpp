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

#include "qgeom/densmat.hpp"
#include "qgeom/simplex.hpp"

namespace qgeom {

/// Polar form of one off-diagonal element rho_ij (i < j).
struct PolarEntry {
    double magnitude = 0.0;
    double phase = 0.0;  // (-pi, pi]; 0 when magnitude is 0
};

/// Position of a state inside its decoherence leaf, in the representation
/// basis of the matrix: the shared diagonal plus d(d-1)/2 off-diagonal
/// complex numbers in row-major (0,1), (0,2), ..., (1,2), ... order.
struct LeafCoordinates {
    ProbabilityVector diag;
    std::vector<PolarEntry> offdiag;

    /// sqrt(sum of squared magnitudes)
    double radius() const;
};

/// Diagonal part of rho: the foot of the perpendicular onto the basis simplex.
DensityMatrix project_to_simplex(const DensityMatrix& rho);

LeafCoordinates leaf_coordinates(const DensityMatrix& rho, const Tolerances& tol = {});

/// Distance from rho to its projection onto the basis simplex.
double leaf_radius(const DensityMatrix& rho);

/// True iff the diagonals agree to tol.classification.
bool same_leaf(const DensityMatrix& a, const DensityMatrix& b, const Tolerances& tol = {});

/// The three sides of the right triangle (I/d, rho_P, rho).
struct LeafDecomposition {
    double r_s;  // |rho_P - I/d|, within the simplex
    double r_c;  // |rho - rho_P|, within the leaf
    double r_d;  // |rho - I/d|, the hypotenuse
};
LeafDecomposition leaf_decomposition(const DensityMatrix& rho);

}  // namespace qgeom
