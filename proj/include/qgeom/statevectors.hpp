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

#include "qgeom/densmat.hpp"

namespace qgeom {

/// I/d for d >= 1 (d = 1 is the pure 1x1 state [1]).
DensityMatrix maximally_mixed(std::size_t d);

/// Lengths (statespace units) and angles (radians) of the nested
/// maximally mixed states rho_{M,d}.
struct HierarchyMetrics {
    std::size_t d = 0;
    double r_Md = 0.0;        // |rho_{M,d}| from the infinite-dimensional origin
    double r_d = 0.0;         // rho_{M,d} to a pure state in its mixture
    double r_succ = 0.0;      // rho_{M,d} to rho_{M,d+1}
    double theta_d = 0.0;     // at rho_{M,d}, between two orthogonal pure states
    double theta_Md = 0.0;    // between rho_{M,d} and a pure statevector
    double theta_succ = 0.0;  // between rho_{M,d} and rho_{M,d+1} statevectors
};

/// Closed forms.
HierarchyMetrics hierarchy_metrics(std::size_t d);

/// The same quantities measured on explicit matrices with the embedding
/// module, nesting lower dimensions by zero-padding.
HierarchyMetrics hierarchy_metrics_numeric(std::size_t d);

/// sqrt(1/(2d') - 1/(2d)), the distance from rho_{M,d} to rho_{M,d'}
/// nested inside it. BadOrdering unless d >= d' >= 1.
double cross_level_distance(std::size_t d, std::size_t d_prime);

}  // namespace qgeom
