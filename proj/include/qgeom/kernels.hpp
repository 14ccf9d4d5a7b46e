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

// Batch kernels over many states. Each kernel has a serial reference and
// an OpenMP version; both produce bit-identical results because every
// output element is computed by the same scalar code and reductions run
// in a fixed order.

#include <vector>

#include "qgeom/densmat.hpp"
#include "qgeom/leaves.hpp"
#include "qgeom/measurement.hpp"

namespace qgeom::kernels {

/// Symmetric matrix of statespace distances.
RMatrix pairwise_distances_serial(const std::vector<DensityMatrix>& states);
RMatrix pairwise_distances_omp(const std::vector<DensityMatrix>& states);

/// Column k holds to_statepoint(states[k]).coords. All states share one dimension.
RMatrix statepoints_serial(const std::vector<DensityMatrix>& states);
RMatrix statepoints_omp(const std::vector<DensityMatrix>& states);

std::vector<LeafDecomposition> leaf_decompositions_serial(const std::vector<DensityMatrix>& states);
std::vector<LeafDecomposition> leaf_decompositions_omp(const std::vector<DensityMatrix>& states);

/// Design matrix and right-hand side of the tomography least-squares
/// problem: row (b, i) holds <B_i| l_k |B_i> and p_i - 1/d.
struct NormalEquations {
    RMatrix design;  // rows = sum of basis dims, cols = d^2 - 1
    RVector rhs;
    RMatrix normal;  // design^T design
    RVector normal_rhs;
};
NormalEquations tomography_system_serial(const TomographyRecord& record);
NormalEquations tomography_system_omp(const TomographyRecord& record);

}  // namespace qgeom::kernels
