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

#include "qgeom/kernels.hpp"

#include <cmath>

#include <fmt/format.h>

#include "qgeom/embedding.hpp"
#include "qgeom/error.hpp"

namespace qgeom::kernels {

namespace {

Eigen::Index common_dim(const std::vector<DensityMatrix>& states) {
    if (states.empty()) return 0;
    const std::size_t d = states.front().dim();
    for (const DensityMatrix& s : states)
        if (s.dim() != d) throw Error(ErrorCode::DimensionMismatch, "batch mixes state dimensions");
    return static_cast<Eigen::Index>(d);
}

// One basis' slice of the tomography system.
struct BasisBlock {
    RMatrix rows;
    RVector rhs;
    RMatrix normal;
    RVector normal_rhs;
};

BasisBlock basis_block(const MeasurementBasis& basis, const ProbabilityVector& data) {
    const std::size_t d = basis.dim();
    const auto n = static_cast<Eigen::Index>(d);
    BasisBlock block;
    block.rows.resize(n, n * n - 1);
    block.rhs.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        // <B|l_k|B> = Tr(|B><B| l_k) = 2 c_k(|B><B|)
        block.rows.row(i) = 2.0 * to_statepoint(projector(basis.vector(static_cast<std::size_t>(i)))).coords.transpose();
        block.rhs(i) = data.probs[static_cast<std::size_t>(i)] - 1.0 / static_cast<double>(d);
    }
    block.normal = block.rows.transpose() * block.rows;
    block.normal_rhs = block.rows.transpose() * block.rhs;
    return block;
}

void check_record(const TomographyRecord& record) {
    if (record.bases.empty()) throw Error(ErrorCode::EmptyRecord, "tomography record has no bases");
    if (record.bases.size() != record.diag_data.size())
        throw Error(ErrorCode::DimensionMismatch,
                    fmt::format("{} bases but {} probability vectors", record.bases.size(), record.diag_data.size()));
    const std::size_t d = record.bases.front().dim();
    for (std::size_t b = 0; b < record.bases.size(); ++b)
        if (record.bases[b].dim() != d || record.diag_data[b].dim() != d)
            throw Error(ErrorCode::DimensionMismatch, fmt::format("basis {} does not have dimension {}", b, d));
}

NormalEquations assemble(const std::vector<BasisBlock>& blocks) {
    const Eigen::Index n = blocks.front().rows.rows();
    const Eigen::Index k = blocks.front().rows.cols();
    const auto count = static_cast<Eigen::Index>(blocks.size());
    NormalEquations eq;
    eq.design.resize(n * count, k);
    eq.rhs.resize(n * count);
    eq.normal = RMatrix::Zero(k, k);
    eq.normal_rhs = RVector::Zero(k);
    for (Eigen::Index b = 0; b < count; ++b) {
        const BasisBlock& block = blocks[static_cast<std::size_t>(b)];
        eq.design.middleRows(b * n, n) = block.rows;
        eq.rhs.segment(b * n, n) = block.rhs;
        eq.normal += block.normal;
        eq.normal_rhs += block.normal_rhs;
    }
    return eq;
}

}  // namespace

RMatrix pairwise_distances_serial(const std::vector<DensityMatrix>& states) {
    common_dim(states);
    const auto n = static_cast<Eigen::Index>(states.size());
    RMatrix out = RMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double r = distance(states[static_cast<std::size_t>(i)], states[static_cast<std::size_t>(j)]);
            out(i, j) = r;
            out(j, i) = r;
        }
    return out;
}

RMatrix pairwise_distances_omp(const std::vector<DensityMatrix>& states) {
    common_dim(states);
    const auto n = static_cast<Eigen::Index>(states.size());
    RMatrix out = RMatrix::Zero(n, n);
#pragma omp parallel for schedule(dynamic, 4)
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double r = distance(states[static_cast<std::size_t>(i)], states[static_cast<std::size_t>(j)]);
            out(i, j) = r;
            out(j, i) = r;
        }
    return out;
}

RMatrix statepoints_serial(const std::vector<DensityMatrix>& states) {
    const Eigen::Index d = common_dim(states);
    const auto n = static_cast<Eigen::Index>(states.size());
    RMatrix out(d == 0 ? 0 : d * d - 1, n);
    for (Eigen::Index k = 0; k < n; ++k) out.col(k) = to_statepoint(states[static_cast<std::size_t>(k)]).coords;
    return out;
}

RMatrix statepoints_omp(const std::vector<DensityMatrix>& states) {
    const Eigen::Index d = common_dim(states);
    const auto n = static_cast<Eigen::Index>(states.size());
    RMatrix out(d == 0 ? 0 : d * d - 1, n);
#pragma omp parallel for schedule(static)
    for (Eigen::Index k = 0; k < n; ++k) out.col(k) = to_statepoint(states[static_cast<std::size_t>(k)]).coords;
    return out;
}

std::vector<LeafDecomposition> leaf_decompositions_serial(const std::vector<DensityMatrix>& states) {
    std::vector<LeafDecomposition> out(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) out[k] = leaf_decomposition(states[k]);
    return out;
}

std::vector<LeafDecomposition> leaf_decompositions_omp(const std::vector<DensityMatrix>& states) {
    std::vector<LeafDecomposition> out(states.size());
    const auto n = static_cast<std::ptrdiff_t>(states.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] = leaf_decomposition(states[static_cast<std::size_t>(k)]);
    return out;
}

NormalEquations tomography_system_serial(const TomographyRecord& record) {
    check_record(record);
    std::vector<BasisBlock> blocks;
    blocks.reserve(record.bases.size());
    for (std::size_t b = 0; b < record.bases.size(); ++b)
        blocks.push_back(basis_block(record.bases[b], record.diag_data[b]));
    return assemble(blocks);
}

NormalEquations tomography_system_omp(const TomographyRecord& record) {
    check_record(record);
    std::vector<BasisBlock> blocks(record.bases.size());
    const auto count = static_cast<std::ptrdiff_t>(record.bases.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < count; ++b) {
        const auto i = static_cast<std::size_t>(b);
        blocks[i] = basis_block(record.bases[i], record.diag_data[i]);
    }
    return assemble(blocks);
}

}  // namespace qgeom::kernels
