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

#include "qgeom/mixtures.hpp"

#include <cmath>

#include <fmt/format.h>

#include "qgeom/embedding.hpp"
#include "qgeom/error.hpp"

namespace qgeom {

namespace {
constexpr double kRenormalizeWindow = 1e-6;
constexpr double kCoincident = 1e-9;
}  // namespace

WeightedEnsemble::WeightedEnsemble(std::vector<WeightedState> components) : components_(std::move(components)) {
    if (components_.empty()) throw Error(ErrorCode::BadWeights, "ensemble has no components");
    double sum = 0.0;
    for (const WeightedState& c : components_) {
        if (!std::isfinite(c.weight) || c.weight < 0.0)
            throw Error(ErrorCode::BadWeights, fmt::format("weight {} is negative or not finite", c.weight), c.weight);
        if (c.state.dim() != components_.front().state.dim())
            throw Error(ErrorCode::DimensionMismatch, "ensemble components have different dimensions");
        sum += c.weight;
    }
    if (std::abs(sum - 1.0) > kRenormalizeWindow)
        throw Error(ErrorCode::BadWeights, fmt::format("weights sum to {:.17g}", sum), sum - 1.0);
    for (WeightedState& c : components_) c.weight /= sum;
}

DensityMatrix mix(const WeightedEnsemble& ensemble) {
    const auto n = static_cast<Eigen::Index>(ensemble.dim());
    CMatrix m = CMatrix::Zero(n, n);
    for (const WeightedState& c : ensemble.components()) m += c.weight * c.state.matrix();
    return DensityMatrix::trusted(m);
}

CutRatio cut_ratio(const DensityMatrix& a, const DensityMatrix& b, const DensityMatrix& m) {
    require_same_dim(a, b);
    require_same_dim(a, m);
    const double ab = distance(a, b);
    if (ab <= kCoincident) throw Error(ErrorCode::CoincidentEndpoints, fmt::format("endpoints {:.3g} apart", ab), ab);
    const double am = distance(a, m);
    const double mb = distance(m, b);
    return {am / ab, am + mb - ab};
}

}  // namespace qgeom
