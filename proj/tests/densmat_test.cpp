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

#include <cmath>
#include <limits>

#include "gtest/gtest.h"

#include "qgeom/error.hpp"
#include "support/random_states.hpp"

using namespace qgeom;
using qgeom::testing::matrix2;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an Error";
    return ErrorCode::InvalidInput;
}

}  // namespace

TEST(validate_density, accepts_projector_and_worked_example) {
    EXPECT_EQ(validate_density(matrix2(1, 0, 0, 0)).dim(), 2u);
    EXPECT_NO_THROW(qgeom::testing::worked_example());
}

TEST(validate_density, rejects_indefinite_with_residual) {
    // 2x2 eigenvalues: 1/2 +- sqrt((0.4/2)^2 + 0.5^2)
    const double expected = 0.5 - std::sqrt(0.29);
    try {
        validate_density(matrix2(0.7, 0.5, 0.5, 0.3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPositiveSemiDefinite);
        EXPECT_NEAR(e.residual(), expected, 1e-12);
    }
}

TEST(validate_density, error_paths) {
    EXPECT_EQ(code_of([] { validate_density(matrix2(0.5, 0.1, 0.2, 0.5)); }), ErrorCode::NotHermitian);
    EXPECT_EQ(code_of([] { validate_density(matrix2(0.6, 0, 0, 0.5)); }), ErrorCode::TraceNotOne);
    EXPECT_EQ(code_of([] { validate_density(matrix2(std::numeric_limits<double>::quiet_NaN(), 0, 0, 0.5)); }),
              ErrorCode::InvalidInput);
    EXPECT_EQ(code_of([] { validate_density(CMatrix::Ones(1, 1)); }), ErrorCode::DimensionOutOfRange);
    EXPECT_EQ(code_of([] { validate_density(CMatrix::Zero(2, 3)); }), ErrorCode::InvalidInput);
    Tolerances small;
    small.max_dim = 3;
    EXPECT_EQ(code_of([&] { validate_density(CMatrix::Identity(4, 4) / 4.0, small); }), ErrorCode::DimensionOutOfRange);
    // Complex diagonal is a Hermiticity violation.
    EXPECT_EQ(code_of([] { validate_density(matrix2({0.5, 1e-3}, 0, 0, 0.5)); }), ErrorCode::NotHermitian);
}

TEST(trace_product, examples) {
    const DensityMatrix half = validate_density(CMatrix::Identity(2, 2) / 2.0);
    EXPECT_NEAR(trace_product(half, half), 0.5, 1e-15);
    EXPECT_EQ(trace_product(qgeom::testing::basis_projector(2, 0), qgeom::testing::basis_projector(2, 1)), 0.0);
    const DensityMatrix w = qgeom::testing::worked_example();
    EXPECT_NEAR(trace_product(w, w), 5.0 / 9.0, 1e-15);
    EXPECT_THROW(trace_product(w, qgeom::testing::basis_projector(3, 0)), Error);
}

TEST(frobenius_norm_sq, examples) {
    const DensityMatrix w = qgeom::testing::worked_example();
    EXPECT_EQ(frobenius_norm_sq(w, w), 0.0);
    EXPECT_NEAR(frobenius_norm_sq(qgeom::testing::basis_projector(2, 0), qgeom::testing::basis_projector(2, 1)), 2.0, 1e-15);
    EXPECT_NEAR(frobenius_norm_sq(diagonal_state({0.7, 0.3}), diagonal_state({0.5, 0.5})), 0.08, 1e-15);
}

TEST(eig_hermitian, worked_example) {
    const Spectrum s = eig_hermitian(qgeom::testing::worked_example());
    EXPECT_NEAR(s.eigenvalues[0], 2.0 / 3.0, 1e-14);
    EXPECT_NEAR(s.eigenvalues[1], 1.0 / 3.0, 1e-14);
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(s.eigenvectors(0, 0) - h), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s.eigenvectors(1, 0) - h), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s.eigenvectors(0, 1) - h), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s.eigenvectors(1, 1) + h), 0.0, 1e-12);
}

TEST(eig_hermitian, scalar_and_diagonal) {
    const Spectrum s = eig_hermitian(validate_density(CMatrix::Identity(3, 3) / 3.0));
    for (double p : s.eigenvalues) EXPECT_NEAR(p, 1.0 / 3.0, 1e-15);
    EXPECT_LE((s.eigenvectors - CMatrix::Identity(3, 3)).norm(), 1e-15);

    const Spectrum t = eig_hermitian(diagonal_state({0.3, 0.7}));
    EXPECT_EQ(t.eigenvalues, (std::vector<double>{0.7, 0.3}));
    EXPECT_LE((t.eigenvectors.cwiseAbs() - RMatrix{{0.0, 1.0}, {1.0, 0.0}}).norm(), 1e-15);
}

TEST(eig_hermitian, reconstructs_random_states) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = qgeom::testing::random_dim(rng);
        const DensityMatrix rho = qgeom::testing::varied_state(rng, d);
        const Spectrum s = eig_hermitian(rho);
        for (std::size_t k = 1; k < d; ++k) EXPECT_GE(s.eigenvalues[k - 1], s.eigenvalues[k]);
        double sum = 0.0;
        for (double p : s.eigenvalues) {
            EXPECT_GE(p, -1e-10);
            sum += p;
        }
        EXPECT_NEAR(sum, 1.0, 1e-10);
        const auto n = static_cast<Eigen::Index>(d);
        EXPECT_LE((s.eigenvectors.adjoint() * s.eigenvectors - CMatrix::Identity(n, n)).norm(), 1e-10);
        RVector p = Eigen::Map<const RVector>(s.eigenvalues.data(), n);
        const CMatrix rebuilt = s.eigenvectors * p.cast<std::complex<double>>().asDiagonal() * s.eigenvectors.adjoint();
        EXPECT_LE((rebuilt - rho.matrix()).norm(), 1e-9);
    }
}

TEST(entropy_and_w, examples) {
    const Entropy pure = entropy_and_w(qgeom::testing::basis_projector(3, 1));
    EXPECT_NEAR(pure.s, 0.0, 1e-12);
    EXPECT_NEAR(pure.w, 1.0, 1e-12);
    const Entropy mixed = entropy_and_w(validate_density(CMatrix::Identity(3, 3) / 3.0));
    EXPECT_NEAR(mixed.s, std::log(3.0), 1e-12);
    EXPECT_NEAR(mixed.w, 3.0, 1e-12);
    const Entropy half = entropy_and_w(diagonal_state({0.5, 0.5, 0.0}));
    EXPECT_NEAR(half.s, std::log(2.0), 1e-12);
    EXPECT_NEAR(half.w, 2.0, 1e-12);
}

TEST(entropy_and_w, bounds_on_random_states) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = qgeom::testing::random_dim(rng);
        const DensityMatrix rho = qgeom::testing::varied_state(rng, d);
        const Entropy e = entropy_and_w(rho);
        EXPECT_GE(e.s, 0.0);
        EXPECT_LE(e.s, std::log(static_cast<double>(d)) + 1e-9);
        EXPECT_GE(e.w, 1.0);
        EXPECT_LE(e.w, static_cast<double>(d) + 1e-9);
        const double p = purity(rho);
        EXPECT_GE(p, 1.0 / static_cast<double>(d) - 1e-10);
        EXPECT_LE(p, 1.0 + 1e-10);
    }
}

TEST(classify, examples) {
    EXPECT_EQ(classify(qgeom::testing::basis_projector(2, 0)), StateClass::Pure);
    EXPECT_EQ(classify(diagonal_state({0.5, 0.5, 0.0})), StateClass::SurfaceMixed);
    EXPECT_EQ(classify(validate_density(CMatrix::Identity(2, 2) / 2.0)), StateClass::Interior);
    EXPECT_EQ(classify(qgeom::testing::worked_example()), StateClass::Interior);
}

TEST(change_basis, hadamard_diagonalizes_worked_example) {
    const DensityMatrix out = change_basis(qgeom::testing::worked_example(), qgeom::testing::hadamard());
    EXPECT_LE((out.matrix() - CMatrix(matrix2(2.0 / 3.0, 0, 0, 1.0 / 3.0))).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(change_basis, identity_and_scalar) {
    const DensityMatrix w = qgeom::testing::worked_example();
    EXPECT_EQ(change_basis(w, CMatrix::Identity(2, 2)), w);
    std::mt19937_64 rng(3);
    const DensityMatrix mixed = validate_density(CMatrix::Identity(4, 4) / 4.0);
    const DensityMatrix out = change_basis(mixed, haar_unitary(rng, 4));
    EXPECT_LE((out.matrix() - mixed.matrix()).norm(), 1e-14);
}

TEST(change_basis, rejects_non_unitary) {
    EXPECT_EQ(code_of([] { change_basis(qgeom::testing::worked_example(), 2.0 * CMatrix::Identity(2, 2)); }), ErrorCode::NotUnitary);
    EXPECT_EQ(code_of([] { change_basis(qgeom::testing::worked_example(), CMatrix::Identity(3, 3)); }), ErrorCode::DimensionMismatch);
}

TEST(change_basis, preserves_spectrum_and_trace_products) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = qgeom::testing::random_dim(rng);
        const DensityMatrix a = qgeom::testing::varied_state(rng, d);
        const DensityMatrix b = qgeom::testing::varied_state(rng, d);
        const CMatrix u = haar_unitary(rng, d);
        const Spectrum before = eig_hermitian(a);
        const Spectrum after = eig_hermitian(change_basis(a, u));
        for (std::size_t k = 0; k < d; ++k) EXPECT_NEAR(before.eigenvalues[k], after.eigenvalues[k], 1e-9);
        EXPECT_NEAR(trace_product(a, b), trace_product(change_basis(a, u), change_basis(b, u)), 1e-9);
    }
}
