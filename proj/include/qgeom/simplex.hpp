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

#include "qgeom/config.hpp"
#include "qgeom/hermitian_eigen.hpp"

namespace qgeom {

/// Measurement probabilities of one basis. Entries within -tolerance of
/// zero are accepted and clamped to 0.
struct ProbabilityVector {
    std::vector<double> probs;
    std::size_t dim() const { return probs.size(); }
};

/// Throws InvalidInput (non-finite or out of [-tol, 1]) or BadWeights
/// (sum off by more than tol).
ProbabilityVector make_probability_vector(std::vector<double> probs, const Tolerances& tol = {});

/// Regular unit (d-1)-simplex obtained by mapping the Cartesian
/// probability axes p_1..p_{d-1} through the transformation M.
struct SimplexChart {
    std::size_t dim = 0;
    RMatrix transform;              // M, (d-1) x (d-1)
    RMatrix metric;                 // M^T M
    std::vector<RVector> vertices;  // vertex i = basis state i; the last one is the origin
};

/// Largest dimension for which charts are materialized.
inline constexpr std::size_t kMaxChartDim = 16;

SimplexChart build_chart(std::size_t d);

/// M (p_1, ..., p_{d-1}); equals sum_i p_i vertex_i.
RVector simplex_point(const ProbabilityVector& p, const SimplexChart& chart);

/// sqrt(1/2 sum_i (pa_i - pb_i)^2)
double simplex_distance(const ProbabilityVector& pa, const ProbabilityVector& pb);

/// For each vertex i, the length of every edge segment from the far end
/// to the hyperplane through the statepoint parallel to the facet
/// opposite vertex i. These are the probabilities themselves.
std::vector<double> parallel_cut_lengths(const ProbabilityVector& p);

/// Points where the hyperplane through `point` parallel to the facet
/// opposite `vertex` meets the d-1 edges incident to `vertex`, ordered by
/// the other endpoint's index.
std::vector<RVector> parallel_cut_points(const RVector& point, std::size_t vertex, const SimplexChart& chart);

/// Distance from the simplex center (the maximally mixed point).
double center_distance(const ProbabilityVector& p);

/// Orthonormal frame that puts the first edge along +x and the second
/// vertex in the upper half plane. Rows are the new axes.
RMatrix scene_orientation(const SimplexChart& chart);

}  // namespace qgeom
