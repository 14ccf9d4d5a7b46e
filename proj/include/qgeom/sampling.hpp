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
#include <random>

#include "qgeom/densmat.hpp"

namespace qgeom {

/// Haar-distributed unitary (QR of a complex Ginibre matrix with the R
/// diagonal phases divided out). Deterministic for a given engine state.
CMatrix haar_unitary(std::mt19937_64& rng, std::size_t d);

/// Uniformly random unit ket.
CVector random_ket(std::mt19937_64& rng, std::size_t d);

/// Random state G G^H / Tr(G G^H) with G a d x rank Ginibre matrix;
/// rank == 0 means full rank.
DensityMatrix random_density(std::mt19937_64& rng, std::size_t d, std::size_t rank = 0);

}  // namespace qgeom
