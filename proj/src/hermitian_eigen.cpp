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

#include "qgeom/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "qgeom/error.hpp"

namespace qgeom {

namespace {

using cd = std::complex<double>;

double offdiag_norm(const CMatrix& a) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary G = diag(1, e^{-i phi}) R, R the real
// Jacobi rotation of the phase-stripped 2x2 block. Updates a <- G^H a G and
// v <- v G.
void rotate(CMatrix& a, CMatrix& v, Eigen::Index p, Eigen::Index q) {
    const cd apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const cd phase = apq / mag;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const cd gpp = c;
    const cd gpq = s;
    const cd gqp = -s * std::conj(phase);
    const cd gqq = c * std::conj(phase);

    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        const cd akp = a(k, p);
        const cd akq = a(k, q);
        a(k, p) = akp * gpp + akq * gqp;
        a(k, q) = akp * gpq + akq * gqq;
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        const cd apk = a(p, k);
        const cd aqk = a(q, k);
        a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
        a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (Eigen::Index k = 0; k < n; ++k) {
        const cd vkp = v(k, p);
        const cd vkq = v(k, q);
        v(k, p) = vkp * gpp + vkq * gqp;
        v(k, q) = vkp * gpq + vkq * gqq;
    }
}

// Replaces the columns [first, last) of `vecs`, which span one eigenspace,
// with the canonical basis described in the header.
void canonicalize_cluster(CMatrix& vecs, Eigen::Index first, Eigen::Index last) {
    const Eigen::Index n = vecs.rows();
    const Eigen::Index k = last - first;
    const CMatrix span = vecs.middleCols(first, k);
    const CMatrix projector = span * span.adjoint();

    CMatrix out(n, k);
    Eigen::Index accepted = 0;
    for (Eigen::Index e = 0; e < n && accepted < k; ++e) {
        CVector cand = projector.col(e);
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index j = 0; j < accepted; ++j)
                cand -= out.col(j) * out.col(j).dot(cand);
        const double norm = cand.norm();
        if (norm > 1e-6) out.col(accepted++) = cand / norm;
    }
    // The projected unit vectors always span the eigenspace, so this only
    // trips on a corrupted input span.
    if (accepted < k) return;
    vecs.middleCols(first, k) = out;
}

}  // namespace

void fix_phase(Eigen::Ref<CVector> v, double threshold) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > threshold) {
            v *= std::conj(v(i)) / mag;
            v(i) = mag;
            return;
        }
    }
}

HermitianEigen hermitian_eigen(const CMatrix& input, const JacobiOptions& options) {
    const Eigen::Index n = input.rows();
    if (n == 0 || input.cols() != n)
        throw Error(ErrorCode::InvalidInput, "hermitian_eigen needs a non-empty square matrix");

    // Mirror the upper triangle so the iteration sees an exactly Hermitian matrix.
    CMatrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, i) = input(i, i).real();
        for (Eigen::Index j = i + 1; j < n; ++j) {
            a(i, j) = input(i, j);
            a(j, i) = std::conj(input(i, j));
        }
    }
    CMatrix v = CMatrix::Identity(n, n);

    const double scale = std::max(1.0, a.norm());
    const double target = options.offdiag_tol * scale;
    int sweeps = 0;
    while (offdiag_norm(a) > target) {
        if (sweeps >= options.max_sweeps)
            throw Error(ErrorCode::ConvergenceFailure,
                        "Jacobi iteration exceeded " + std::to_string(options.max_sweeps) + " sweeps",
                        offdiag_norm(a));
        for (Eigen::Index p = 0; p + 1 < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
        ++sweeps;
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        return a(x, x).real() > a(y, y).real();
    });

    HermitianEigen out;
    out.sweeps = sweeps;
    out.values.reserve(static_cast<std::size_t>(n));
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values.push_back(a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real());
        out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }

    Eigen::Index first = 0;
    for (Eigen::Index k = 1; k <= n; ++k) {
        const bool boundary =
            k == n || out.values[static_cast<std::size_t>(k - 1)] - out.values[static_cast<std::size_t>(k)] > options.tie_tol;
        if (!boundary) continue;
        if (k - first > 1) canonicalize_cluster(out.vectors, first, k);
        first = k;
    }
    for (Eigen::Index k = 0; k < n; ++k) fix_phase(out.vectors.col(k));
    return out;
}

}  // namespace qgeom
