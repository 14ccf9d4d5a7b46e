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

#include "qgeom/simplex.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "qgeom/error.hpp"

namespace qgeom {

namespace {

void require_same(const ProbabilityVector& a, const ProbabilityVector& b) {
    if (a.dim() != b.dim())
        throw Error(ErrorCode::DimensionMismatch, fmt::format("probability vectors of length {} and {}", a.dim(), b.dim()));
}

}  // namespace

ProbabilityVector make_probability_vector(std::vector<double> probs, const Tolerances& tol) {
    if (probs.empty()) throw Error(ErrorCode::InvalidInput, "empty probability vector");
    double sum = 0.0;
    for (double& p : probs) {
        if (!std::isfinite(p) || p < -tol.validation || p > 1.0 + tol.validation)
            throw Error(ErrorCode::InvalidInput, fmt::format("probability {} outside [0, 1]", p), p);
        sum += p;
        p = std::clamp(p, 0.0, 1.0);
    }
    if (std::abs(sum - 1.0) > tol.validation)
        throw Error(ErrorCode::BadWeights, fmt::format("probabilities sum to {:.17g}", sum), sum - 1.0);
    return ProbabilityVector{std::move(probs)};
}

SimplexChart build_chart(std::size_t d) {
    if (d < 2 || d > kMaxChartDim)
        throw Error(ErrorCode::DimensionOutOfRange, fmt::format("chart dimension {} outside [2, {}]", d, kMaxChartDim));
    const auto n = static_cast<Eigen::Index>(d - 1);
    const double dd = static_cast<double>(d);
    const double sd = std::sqrt(dd);
    const double scale = 1.0 / (std::sqrt(2.0) * (dd - 1.0));

    SimplexChart chart;
    chart.dim = d;
    chart.transform = RMatrix::Constant(n, n, scale * (sd - 1.0));
    chart.transform.diagonal().setConstant(scale * (sd + dd - 2.0));
    chart.metric = chart.transform.transpose() * chart.transform;
    chart.vertices.reserve(d);
    for (Eigen::Index i = 0; i < n; ++i) chart.vertices.push_back(chart.transform.col(i));
    chart.vertices.push_back(RVector::Zero(n));
    return chart;
}

RVector simplex_point(const ProbabilityVector& p, const SimplexChart& chart) {
    if (p.dim() != chart.dim)
        throw Error(ErrorCode::DimensionMismatch, fmt::format("probability vector of length {} for a d = {} chart", p.dim(), chart.dim));
    const auto n = static_cast<Eigen::Index>(chart.dim - 1);
    RVector w(n);
    for (Eigen::Index i = 0; i < n; ++i) w(i) = p.probs[static_cast<std::size_t>(i)];
    return chart.transform * w;
}

double simplex_distance(const ProbabilityVector& pa, const ProbabilityVector& pb) {
    require_same(pa, pb);
    double s = 0.0;
    for (std::size_t i = 0; i < pa.dim(); ++i) {
        const double diff = pa.probs[i] - pb.probs[i];
        s += diff * diff;
    }
    return std::sqrt(0.5 * s);
}

std::vector<double> parallel_cut_lengths(const ProbabilityVector& p) { return p.probs; }

std::vector<RVector> parallel_cut_points(const RVector& point, std::size_t vertex, const SimplexChart& chart) {
    const std::size_t d = chart.dim;
    if (vertex >= d) throw Error(ErrorCode::InvalidInput, fmt::format("vertex {} of a d = {} simplex", vertex, d));
    if (static_cast<std::size_t>(point.size()) + 1 != d)
        throw Error(ErrorCode::DimensionMismatch, "point does not live in this chart");

    // Facet normal: component of (v_i - v_a) orthogonal to the facet's edge directions.
    const std::size_t anchor = vertex == 0 ? 1 : 0;
    const RVector& va = chart.vertices[anchor];
    std::vector<RVector> basis;
    for (std::size_t j = 0; j < d; ++j) {
        if (j == vertex || j == anchor) continue;
        RVector e = chart.vertices[j] - va;
        for (const RVector& b : basis) e -= b * b.dot(e);
        const double norm = e.norm();
        if (norm > 1e-12) basis.push_back(e / norm);
    }
    RVector normal = chart.vertices[vertex] - va;
    for (const RVector& b : basis) normal -= b * b.dot(normal);

    const double level = normal.dot(point);
    std::vector<RVector> out;
    out.reserve(d - 1);
    for (std::size_t j = 0; j < d; ++j) {
        if (j == vertex) continue;
        const RVector edge = chart.vertices[vertex] - chart.vertices[j];
        const double s = (level - normal.dot(chart.vertices[j])) / normal.dot(edge);
        out.push_back(chart.vertices[j] + s * edge);
    }
    return out;
}

double center_distance(const ProbabilityVector& p) {
    const double inv = 1.0 / static_cast<double>(p.dim());
    double s = 0.0;
    for (double x : p.probs) s += (x - inv) * (x - inv);
    return std::sqrt(0.5 * s);
}

RMatrix scene_orientation(const SimplexChart& chart) {
    const auto n = static_cast<Eigen::Index>(chart.dim - 1);
    const RVector& origin = chart.vertices.back();
    RMatrix frame(n, n);
    Eigen::Index rows = 0;
    for (std::size_t j = 0; j + 1 < chart.dim && rows < n; ++j) {
        RVector e = chart.vertices[j] - origin;
        for (Eigen::Index r = 0; r < rows; ++r) e -= frame.row(r).transpose() * frame.row(r).dot(e);
        const double norm = e.norm();
        if (norm > 1e-12) frame.row(rows++) = (e / norm).transpose();
    }
    return frame;
}

}  // namespace qgeom
