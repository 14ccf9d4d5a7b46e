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

#include "qgeom/sampling.hpp"

#include <cmath>
#include <complex>

namespace qgeom {

namespace {

CMatrix ginibre(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index j = 0; j < g.cols(); ++j)
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = {re, im};
        }
    return g;
}

}  // namespace

CMatrix haar_unitary(std::mt19937_64& rng, std::size_t d) {
    const CMatrix z = ginibre(rng, d, d);
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ() * CMatrix::Identity(z.rows(), z.cols());
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0) q.col(k) *= r(k, k) / mag;
    }
    return q;
}

CVector random_ket(std::mt19937_64& rng, std::size_t d) {
    CVector v = ginibre(rng, d, 1).col(0);
    return v / v.norm();
}

DensityMatrix random_density(std::mt19937_64& rng, std::size_t d, std::size_t rank) {
    const CMatrix g = ginibre(rng, d, rank == 0 ? d : rank);
    CMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix::trusted(m);
}

}  // namespace qgeom
