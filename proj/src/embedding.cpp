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

#include "qgeom/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <fmt/format.h>

#include "qgeom/error.hpp"

namespace qgeom {

namespace {

using cd = std::complex<double>;

void require_dim(std::size_t d, const Tolerances& tol) {
    if (d < 2 || d > tol.max_dim)
        throw Error(ErrorCode::DimensionOutOfRange, fmt::format("dimension {} outside [2, {}]", d, tol.max_dim));
}

}  // namespace

GeneratorBasis generator_basis(std::size_t d, const Tolerances& tol) {
    require_dim(d, tol);
    const auto n = static_cast<Eigen::Index>(d);
    GeneratorBasis basis;
    basis.dim = d;
    basis.generators.reserve(d * d - 1);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = j + 1; k < n; ++k) {
            CMatrix g = CMatrix::Zero(n, n);
            g(j, k) = 1.0;
            g(k, j) = 1.0;
            basis.generators.push_back(std::move(g));
        }
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = j + 1; k < n; ++k) {
            CMatrix g = CMatrix::Zero(n, n);
            g(j, k) = cd(0.0, -1.0);
            g(k, j) = cd(0.0, 1.0);
            basis.generators.push_back(std::move(g));
        }
    for (Eigen::Index l = 1; l < n; ++l) {
        const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
        CMatrix g = CMatrix::Zero(n, n);
        for (Eigen::Index m = 0; m < l; ++m) g(m, m) = scale;
        g(l, l) = -scale * static_cast<double>(l);
        basis.generators.push_back(std::move(g));
    }
    return basis;
}

std::shared_ptr<const GeneratorBasis> cached_generator_basis(std::size_t d) {
    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const GeneratorBasis>> memo;
    std::lock_guard lock(mutex);
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    Tolerances tol;
    tol.max_dim = std::max(tol.max_dim, d);
    auto basis = std::make_shared<const GeneratorBasis>(generator_basis(d, tol));
    memo.emplace(d, basis);
    return basis;
}

StatePoint to_statepoint(const DensityMatrix& rho) {
    // Closed form of 1/2 Tr(rho l_k) for the ordering documented in the header.
    const auto n = static_cast<Eigen::Index>(rho.dim());
    const CMatrix& m = rho.matrix();
    const Eigen::Index pairs = n * (n - 1) / 2;
    StatePoint p;
    p.dim = rho.dim();
    p.coords.resize(n * n - 1);
    Eigen::Index idx = 0;
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = j + 1; k < n; ++k, ++idx) {
            p.coords(idx) = m(j, k).real();
            p.coords(idx + pairs) = -m(j, k).imag();
        }
    idx = 2 * pairs;
    double partial = 0.0;
    for (Eigen::Index l = 1; l < n; ++l, ++idx) {
        partial += m(l - 1, l - 1).real();
        const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
        p.coords(idx) = 0.5 * scale * (partial - static_cast<double>(l) * m(l, l).real());
    }
    return p;
}

DensityMatrix from_statepoint(const StatePoint& p, const Tolerances& tol) {
    require_dim(p.dim, tol);
    const std::size_t expected = p.dim * p.dim - 1;
    if (static_cast<std::size_t>(p.coords.size()) != expected)
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("d = {} needs {} coordinates, got {}", p.dim, expected, p.coords.size()));
    const auto basis = cached_generator_basis(p.dim);
    const auto n = static_cast<Eigen::Index>(p.dim);
    CMatrix m = CMatrix::Identity(n, n) / static_cast<double>(p.dim);
    for (std::size_t k = 0; k < expected; ++k) m += p.coords(static_cast<Eigen::Index>(k)) * basis->generators[k];
    return validate_density(m, tol);
}

double distance(const DensityMatrix& a, const DensityMatrix& b) {
    return std::sqrt(0.5 * frobenius_norm_sq(a, b));
}

double distance_trace_expanded(const DensityMatrix& a, const DensityMatrix& b) {
    const double sq = 0.5 * purity(a) + 0.5 * purity(b) - trace_product(a, b);
    return std::sqrt(std::max(sq, 0.0));
}

double origin_radius(const DensityMatrix& rho) { return std::sqrt(0.5 * purity(rho)); }

double angle(const DensityMatrix& a, const DensityMatrix& b) {
    require_same_dim(a, b);
    const double ra = origin_radius(a);
    const double rb = origin_radius(b);
    if (!(ra > 0.0) || !(rb > 0.0) || !std::isfinite(ra) || !std::isfinite(rb))
        throw Error(ErrorCode::ZeroStatevector, "statevector of zero length has no direction");
    const double c = trace_product(a, b) / (2.0 * ra * rb);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

DensityMatrix embed_in_dimension(const DensityMatrix& rho, std::size_t d) {
    if (d < rho.dim())
        throw Error(ErrorCode::BadOrdering, fmt::format("cannot embed d = {} into d = {}", rho.dim(), d));
    const auto n = static_cast<Eigen::Index>(rho.dim());
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    m.topLeftCorner(n, n) = rho.matrix();
    return DensityMatrix::trusted(m);
}

}  // namespace qgeom
