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

namespace qgeom {

struct WeightedState {
    double weight;
    DensityMatrix state;
};

/// A probability-weighted ensemble of states of one dimension.
class WeightedEnsemble {
  public:
    /// Weights must be >= 0. A sum within 1e-6 of 1 is renormalized;
    /// anything further off is BadWeights. Mixed dimensions are
    /// DimensionMismatch; an empty list is BadWeights.
    explicit WeightedEnsemble(std::vector<WeightedState> components);

    const std::vector<WeightedState>& components() const { return components_; }
    std::size_t dim() const { return components_.front().state.dim(); }

  private:
    std::vector<WeightedState> components_;
};

/// sum_i w_i rho_i
DensityMatrix mix(const WeightedEnsemble& ensemble);

struct CutRatio {
    double t;         // |a m| / |a b|
    double residual;  // |a m| + |m b| - |a b|, zero iff m is on the segment
};

/// Where m cuts the segment from a to b. CoincidentEndpoints when
/// |a b| <= 1e-9.
CutRatio cut_ratio(const DensityMatrix& a, const DensityMatrix& b, const DensityMatrix& m);

}  // namespace qgeom
