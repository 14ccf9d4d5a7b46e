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

#include "qgeom/statevectors.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "qgeom/embedding.hpp"
#include "qgeom/error.hpp"

namespace qgeom {

DensityMatrix maximally_mixed(std::size_t d) {
    if (d < 1 || d > 4096) throw Error(ErrorCode::DimensionOutOfRange, fmt::format("dimension {}", d));
    const auto n = static_cast<Eigen::Index>(d);
    return DensityMatrix::trusted(CMatrix::Identity(n, n) / static_cast<double>(d));
}

HierarchyMetrics hierarchy_metrics(std::size_t d) {
    if (d < 2) throw Error(ErrorCode::DimensionOutOfRange, fmt::format("hierarchy needs d >= 2, got {}", d));
    const double x = static_cast<double>(d);
    HierarchyMetrics m;
    m.d = d;
    m.r_Md = 1.0 / std::sqrt(2.0 * x);
    m.r_d = std::sqrt(0.5 - 1.0 / (2.0 * x));
    m.r_succ = 1.0 / std::sqrt(2.0 * x * (x + 1.0));
    m.theta_d = std::acos(1.0 / (1.0 - x));
    m.theta_Md = std::acos(1.0 / std::sqrt(x));
    m.theta_succ = std::acos(std::sqrt(x / (x + 1.0)));
    return m;
}

HierarchyMetrics hierarchy_metrics_numeric(std::size_t d) {
    if (d < 2) throw Error(ErrorCode::DimensionOutOfRange, fmt::format("hierarchy needs d >= 2, got {}", d));
    const auto n = static_cast<Eigen::Index>(d);
    const DensityMatrix mixed = maximally_mixed(d);
    const DensityMatrix a = projector(CVector::Unit(n, 0));
    const DensityMatrix b = projector(CVector::Unit(n, 1));
    const DensityMatrix mixed_nested = embed_in_dimension(mixed, d + 1);
    const DensityMatrix next = maximally_mixed(d + 1);

    HierarchyMetrics m;
    m.d = d;
    m.r_Md = origin_radius(mixed);
    m.r_d = distance(mixed, a);
    m.r_succ = distance(mixed_nested, next);

    // Angle at the rho_{M,d} vertex, measured between embedded coordinate vectors.
    const RVector center = to_statepoint(mixed).coords;
    const RVector to_a = to_statepoint(a).coords - center;
    const RVector to_b = to_statepoint(b).coords - center;
    m.theta_d = std::acos(std::clamp(to_a.dot(to_b) / (to_a.norm() * to_b.norm()), -1.0, 1.0));

    m.theta_Md = angle(mixed, a);
    m.theta_succ = angle(mixed_nested, next);
    return m;
}

double cross_level_distance(std::size_t d, std::size_t d_prime) {
    if (d_prime < 1 || d < d_prime)
        throw Error(ErrorCode::BadOrdering, fmt::format("need d >= d' >= 1, got d = {}, d' = {}", d, d_prime));
    const double sq = 1.0 / (2.0 * static_cast<double>(d_prime)) - 1.0 / (2.0 * static_cast<double>(d));
    return std::sqrt(std::max(sq, 0.0));
}

}  // namespace qgeom
