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

#include "qgeom/densmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

#include "qgeom/error.hpp"

namespace qgeom {

namespace {

CMatrix hermitize(const CMatrix& m) {
    CMatrix h = 0.5 * (m + m.adjoint());
    for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) = h(i, i).real();
    return h;
}

JacobiOptions jacobi_options(const Tolerances& tol) {
    JacobiOptions o;
    o.offdiag_tol = tol.eig_offdiag;
    o.max_sweeps = tol.eig_max_sweeps;
    o.tie_tol = tol.classification;
    return o;
}

}  // namespace

const char* to_string(StateClass c) {
    switch (c) {
        case StateClass::Pure: return "Pure";
        case StateClass::SurfaceMixed: return "SurfaceMixed";
        case StateClass::Interior: return "Interior";
    }
    return "Unknown";
}

DensityMatrix DensityMatrix::trusted(const CMatrix& m) { return DensityMatrix(hermitize(m)); }

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim())
        throw Error(ErrorCode::DimensionMismatch, fmt::format("dimensions {} and {} differ", a.dim(), b.dim()));
}

DensityMatrix validate_density(const CMatrix& entries, const Tolerances& tol) {
    const Eigen::Index n = entries.rows();
    if (entries.cols() != n) throw Error(ErrorCode::InvalidInput, "matrix is not square");
    if (n < 2 || static_cast<std::size_t>(n) > tol.max_dim)
        throw Error(ErrorCode::DimensionOutOfRange,
                    fmt::format("dimension {} outside [2, {}]", n, tol.max_dim));
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            if (!std::isfinite(entries(i, j).real()) || !std::isfinite(entries(i, j).imag()))
                throw Error(ErrorCode::InvalidInput, fmt::format("entry ({}, {}) is not finite", i, j));

    double herm = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) herm = std::max(herm, std::abs(entries(i, j) - std::conj(entries(j, i))));
    if (herm > tol.validation)
        throw Error(ErrorCode::NotHermitian, fmt::format("max |a_ij - conj(a_ji)| = {:.3g}", herm), herm);

    const CMatrix h = hermitize(entries);
    const double trace_err = std::abs(h.trace().real() - 1.0);
    if (trace_err > tol.validation)
        throw Error(ErrorCode::TraceNotOne, fmt::format("|Tr - 1| = {:.3g}", trace_err), trace_err);

    const HermitianEigen eig = hermitian_eigen(h, jacobi_options(tol));
    const double lowest = eig.values.back();
    if (lowest < -tol.validation)
        throw Error(ErrorCode::NotPositiveSemiDefinite, fmt::format("smallest eigenvalue {:.6g}", lowest), lowest);

    return DensityMatrix::trusted(h);
}

double trace_product(const DensityMatrix& a, const DensityMatrix& b) {
    require_same_dim(a, b);
    // Tr(ab) = sum_ij a_ij b_ji
    const std::complex<double> t = (a.matrix().array() * b.matrix().transpose().array()).sum();
    if (std::abs(t.imag()) > 1e-12)
        throw Error(ErrorCode::NotHermitian, "Tr(ab) has a non-vanishing imaginary part", std::abs(t.imag()));
    return t.real();
}

double purity(const DensityMatrix& rho) { return rho.matrix().squaredNorm(); }

double frobenius_norm_sq(const DensityMatrix& a, const DensityMatrix& b) {
    require_same_dim(a, b);
    return (a.matrix() - b.matrix()).squaredNorm();
}

Spectrum eig_hermitian(const DensityMatrix& rho, const Tolerances& tol) {
    HermitianEigen eig = hermitian_eigen(rho.matrix(), jacobi_options(tol));
    Spectrum s;
    s.eigenvalues = std::move(eig.values);
    for (double& p : s.eigenvalues)
        if (p < 0.0 && p >= -tol.validation) p = 0.0;
    s.eigenvectors = std::move(eig.vectors);
    return s;
}

Entropy entropy_and_w(const Spectrum& spectrum) {
    double s = 0.0;
    for (double p : spectrum.eigenvalues)
        if (p > 0.0) s -= p * std::log(p);
    s = std::max(s, 0.0);
    return {s, std::exp(s)};
}

Entropy entropy_and_w(const DensityMatrix& rho, const Tolerances& tol) {
    return entropy_and_w(eig_hermitian(rho, tol));
}

StateClass classify(const DensityMatrix& rho, const Tolerances& tol) {
    if (std::abs(purity(rho) - 1.0) <= tol.classification) return StateClass::Pure;
    const Spectrum s = eig_hermitian(rho, tol);
    if (s.eigenvalues.back() <= tol.classification) return StateClass::SurfaceMixed;
    return StateClass::Interior;
}

void require_unitary(const CMatrix& u, double tol, std::size_t dim) {
    if (u.rows() != u.cols()) throw Error(ErrorCode::InvalidInput, "unitary must be square");
    if (dim != 0 && static_cast<std::size_t>(u.rows()) != dim)
        throw Error(ErrorCode::DimensionMismatch, fmt::format("unitary is {}x{}, state has d = {}", u.rows(), u.cols(), dim));
    const CMatrix gram = u.adjoint() * u;
    const double err = (gram - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
    if (!(err <= tol)) throw Error(ErrorCode::NotUnitary, fmt::format("max |U^H U - I| = {:.3g}", err), err);
}

DensityMatrix change_basis(const DensityMatrix& rho, const CMatrix& u, const Tolerances& tol) {
    require_unitary(u, tol.validation, rho.dim());
    return DensityMatrix::trusted(u * rho.matrix() * u.adjoint());
}

DensityMatrix projector(const CVector& ket) {
    const double n = ket.norm();
    if (!(n > 0.0)) throw Error(ErrorCode::InvalidInput, "zero ket");
    const CVector k = ket / n;
    return DensityMatrix::trusted(k * k.adjoint());
}

DensityMatrix diagonal_state(const std::vector<double>& probs, const Tolerances& tol) {
    const auto n = static_cast<Eigen::Index>(probs.size());
    CMatrix m = CMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = probs[static_cast<std::size_t>(i)];
    return validate_density(m, tol);
}

}  // namespace qgeom
