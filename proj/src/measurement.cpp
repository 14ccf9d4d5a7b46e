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

#include "qgeom/measurement.hpp"

#include <cmath>
#include <random>

#include <fmt/format.h>

#include "qgeom/embedding.hpp"
#include "qgeom/error.hpp"
#include "qgeom/kernels.hpp"
#include "qgeom/sampling.hpp"

namespace qgeom {

namespace {

using cd = std::complex<double>;

constexpr std::uint64_t kDefaultBasisSeed = 20240607;

}  // namespace

MeasurementBasis::MeasurementBasis(CMatrix vectors, const Tolerances& tol) : u_(std::move(vectors)) {
    require_unitary(u_, tol.validation);
    if (u_.rows() < 2) throw Error(ErrorCode::DimensionOutOfRange, "measurement basis needs d >= 2");
}

MeasurementBasis MeasurementBasis::computational(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    return MeasurementBasis(CMatrix::Identity(n, n));
}

std::vector<MeasurementBasis> pauli_bases() {
    const double h = 1.0 / std::sqrt(2.0);
    CMatrix x(2, 2);
    x << h, h, h, -h;
    CMatrix y(2, 2);
    y << h, h, cd(0.0, h), cd(0.0, -h);
    return {MeasurementBasis::computational(2), MeasurementBasis(x), MeasurementBasis(y)};
}

ProbabilityVector measure_probabilities(const DensityMatrix& rho, const MeasurementBasis& basis) {
    if (rho.dim() != basis.dim())
        throw Error(ErrorCode::DimensionMismatch, fmt::format("state d = {}, basis d = {}", rho.dim(), basis.dim()));
    const CMatrix in_basis = basis.unitary().adjoint() * rho.matrix() * basis.unitary();
    std::vector<double> p(rho.dim());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const cd z = in_basis(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
        if (std::abs(z.imag()) > 1e-12)
            throw Error(ErrorCode::NotHermitian, "complex diagonal expectation value", std::abs(z.imag()));
        p[i] = z.real();
    }
    Tolerances loose;
    loose.validation = 1e-9;
    return make_probability_vector(std::move(p), loose);
}

DensityMatrix decohere(const DensityMatrix& rho, const MeasurementBasis& basis, double t, double gamma) {
    if (!(t >= 0.0)) throw Error(ErrorCode::NegativeTime, fmt::format("t = {}", t), t);
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw Error(ErrorCode::InvalidInput, fmt::format("gamma = {}", gamma));
    if (rho.dim() != basis.dim())
        throw Error(ErrorCode::DimensionMismatch, fmt::format("state d = {}, basis d = {}", rho.dim(), basis.dim()));
    const double rate = gamma * t;
    const double factor = std::isinf(rate) ? 0.0 : std::exp(-rate);
    const CMatrix& u = basis.unitary();
    CMatrix in_basis = u.adjoint() * rho.matrix() * u;
    for (Eigen::Index i = 0; i < in_basis.rows(); ++i)
        for (Eigen::Index j = 0; j < in_basis.cols(); ++j)
            if (i != j) in_basis(i, j) *= factor;
    return DensityMatrix::trusted(u * in_basis * u.adjoint());
}

TomographyRecord simulate_record(const DensityMatrix& rho, const std::vector<MeasurementBasis>& bases) {
    TomographyRecord record{bases, {}};
    record.diag_data.reserve(bases.size());
    for (const MeasurementBasis& b : bases) record.diag_data.push_back(measure_probabilities(rho, b));
    return record;
}

std::size_t tomography_rank(const std::vector<MeasurementBasis>& bases) {
    if (bases.empty()) return 0;
    TomographyRecord record{bases, {}};
    const std::size_t d = bases.front().dim();
    for (std::size_t b = 0; b < bases.size(); ++b)
        record.diag_data.push_back(ProbabilityVector{std::vector<double>(d, 1.0 / static_cast<double>(d))});
    const kernels::NormalEquations eq = kernels::tomography_system_serial(record);
    Eigen::FullPivLU<RMatrix> lu(eq.design);
    lu.setThreshold(1e-10);
    return static_cast<std::size_t>(lu.rank());
}

std::vector<MeasurementBasis> default_tomography_bases(std::size_t d) {
    if (d < 2) throw Error(ErrorCode::DimensionOutOfRange, "tomography needs d >= 2");
    if (d == 2) return pauli_bases();
    for (std::uint64_t seed = kDefaultBasisSeed;; ++seed) {
        std::mt19937_64 rng(seed);
        std::vector<MeasurementBasis> bases;
        bases.reserve(d + 1);
        for (std::size_t b = 0; b <= d; ++b) bases.emplace_back(haar_unitary(rng, d));
        if (tomography_rank(bases) == d * d - 1) return bases;
    }
}

Reconstruction reconstruct(const TomographyRecord& record, const Tolerances& tol) {
    const kernels::NormalEquations eq = kernels::tomography_system_omp(record);
    const std::size_t d = record.bases.front().dim();

    Eigen::CompleteOrthogonalDecomposition<RMatrix> cod(eq.normal);
    cod.setThreshold(1e-12);
    StatePoint point{d, cod.solve(eq.normal_rhs)};
    const double misfit = (eq.design * point.coords - eq.rhs).norm();

    const auto basis = cached_generator_basis(d);
    const auto n = static_cast<Eigen::Index>(d);
    CMatrix estimate = CMatrix::Identity(n, n) / static_cast<double>(d);
    for (Eigen::Index k = 0; k < point.coords.size(); ++k)
        estimate += point.coords(k) * basis->generators[static_cast<std::size_t>(k)];

    JacobiOptions opts;
    opts.offdiag_tol = tol.eig_offdiag;
    opts.max_sweeps = tol.eig_max_sweeps;
    const HermitianEigen eig = hermitian_eigen(estimate, opts);
    if (eig.values.back() >= 0.0) return {DensityMatrix::trusted(estimate), misfit};

    // Clamp negative eigenvalues and renormalize the trace.
    std::vector<double> clamped = eig.values;
    double total = 0.0;
    for (double& p : clamped) total += (p = std::max(p, 0.0));
    RVector values(n);
    for (Eigen::Index k = 0; k < n; ++k) values(k) = clamped[static_cast<std::size_t>(k)] / total;
    const CMatrix projected = eig.vectors * values.cast<cd>().asDiagonal() * eig.vectors.adjoint();
    return {DensityMatrix::trusted(projected), misfit + (projected - estimate).norm()};
}

}  // namespace qgeom
