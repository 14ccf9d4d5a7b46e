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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "qgeom/embedding.hpp"
#include "qgeom/error.hpp"
#include "support/random_states.hpp"

using namespace qgeom;

namespace {

ProbabilityVector random_probs(std::mt19937_64& rng, std::size_t d) {
    std::exponential_distribution<double> e(1.0);
    std::vector<double> p(d);
    double s = 0.0;
    for (double& x : p) s += (x = e(rng));
    for (double& x : p) x /= s;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < d; ++i) acc += p[i];
    p.back() = 1.0 - acc;
    return make_probability_vector(p);
}

// Oracle: intersection of two 2-d lines given as point + direction.
Eigen::Vector2d intersect(const Eigen::Vector2d& p, const Eigen::Vector2d& u, const Eigen::Vector2d& q,
                          const Eigen::Vector2d& v) {
    Eigen::Matrix2d a;
    a << u, -v;
    const Eigen::Vector2d st = a.fullPivLu().solve(q - p);
    return p + st(0) * u;
}

}  // namespace

TEST(build_chart, explicit_transform) {
    const SimplexChart c3 = build_chart(3);
    const double s = 1.0 / (2.0 * std::sqrt(2.0));
    EXPECT_NEAR(c3.transform(0, 0), s * (std::sqrt(3.0) + 1.0), 1e-15);
    EXPECT_NEAR(c3.transform(1, 1), s * (std::sqrt(3.0) + 1.0), 1e-15);
    EXPECT_NEAR(c3.transform(0, 1), s * (std::sqrt(3.0) - 1.0), 1e-15);
    EXPECT_NEAR(c3.transform(1, 0), s * (std::sqrt(3.0) - 1.0), 1e-15);
    const SimplexChart c2 = build_chart(2);
    ASSERT_EQ(c2.transform.rows(), 1);
    EXPECT_NEAR(c2.transform(0, 0), 1.0, 1e-15);
    EXPECT_THROW(build_chart(1), Error);
    EXPECT_THROW(build_chart(kMaxChartDim + 1), Error);
}

TEST(build_chart, unit_edges_metric_and_eigen_action) {
    for (std::size_t d = 2; d <= 8; ++d) {
        const SimplexChart c = build_chart(d);
        const auto n = static_cast<Eigen::Index>(d - 1);
        ASSERT_EQ(c.vertices.size(), d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                EXPECT_NEAR((c.vertices[i] - c.vertices[j]).norm(), 1.0, 1e-12) << d << ' ' << i << ' ' << j;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) EXPECT_NEAR(c.metric(i, j), i == j ? 1.0 : 0.5, 1e-12);
        const RVector ones = RVector::Ones(n);
        EXPECT_LE((c.transform * ones - std::sqrt(static_cast<double>(d) / 2.0) * ones).norm(), 1e-12);
        for (Eigen::Index i = 1; i < n; ++i) {
            const RVector v = RVector::Unit(n, 0) - RVector::Unit(n, i);
            EXPECT_LE((c.transform * v - v / std::sqrt(2.0)).norm(), 1e-12);
        }
    }
}

TEST(simplex_point, vertices_center_and_barycentric) {
    const SimplexChart c = build_chart(3);
    EXPECT_LE((simplex_point(make_probability_vector({1, 0, 0}), c) - c.vertices[0]).norm(), 1e-15);
    EXPECT_LE(simplex_point(make_probability_vector({0, 0, 1}), c).norm(), 0.0);
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = qgeom::testing::random_dim(rng, 2, 8);
        const SimplexChart chart = build_chart(d);
        const ProbabilityVector p = random_probs(rng, d);
        RVector bary = RVector::Zero(static_cast<Eigen::Index>(d - 1));
        for (std::size_t i = 0; i < d; ++i) bary += p.probs[i] * chart.vertices[i];
        EXPECT_LE((simplex_point(p, chart) - bary).norm(), 1e-12);
    }
    EXPECT_THROW(simplex_point(make_probability_vector({0.5, 0.5}), c), Error);
}

TEST(simplex_distance, matches_chart_and_embedding) {
    EXPECT_NEAR(simplex_distance(make_probability_vector({1, 0}), make_probability_vector({0, 1})), 1.0, 1e-15);
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = qgeom::testing::random_dim(rng, 2, 8);
        const ProbabilityVector a = random_probs(rng, d);
        const ProbabilityVector b = random_probs(rng, d);
        const SimplexChart chart = build_chart(d);
        const double s = simplex_distance(a, b);
        EXPECT_NEAR(s, (simplex_point(a, chart) - simplex_point(b, chart)).norm(), 1e-12);
        EXPECT_NEAR(s, distance(diagonal_state(a.probs), diagonal_state(b.probs)), 1e-12);
    }
    EXPECT_THROW(simplex_distance(make_probability_vector({1, 0}), make_probability_vector({1, 0, 0})), Error);
}

TEST(center_distance, examples) {
    EXPECT_NEAR(center_distance(make_probability_vector({0.5, 0.5})), 0.0, 1e-16);
    EXPECT_NEAR(center_distance(make_probability_vector({0.7, 0.3})), 0.2, 1e-15);
    for (std::size_t d = 2; d <= 8; ++d) {
        std::vector<double> p(d, 0.0);
        p[0] = 1.0;
        EXPECT_NEAR(center_distance(make_probability_vector(p)),
                    std::sqrt(0.5 * (1.0 - 1.0 / static_cast<double>(d))), 1e-15);
    }
}

TEST(parallel_cuts, lengths_are_probabilities) {
    const ProbabilityVector p = make_probability_vector({0.5, 0.3, 0.2});
    EXPECT_EQ(parallel_cut_lengths(p), p.probs);
}

TEST(parallel_cuts, qutrit_matches_line_intersection) {
    std::mt19937_64 rng(43);
    const SimplexChart chart = build_chart(3);
    for (int trial = 0; trial < 100; ++trial) {
        const ProbabilityVector p = random_probs(rng, 3);
        const Eigen::Vector2d x = simplex_point(p, chart);
        for (std::size_t i = 0; i < 3; ++i) {
            const std::size_t j = (i + 1) % 3;
            const std::size_t k = (i + 2) % 3;
            const Eigen::Vector2d vi = chart.vertices[i], vj = chart.vertices[j], vk = chart.vertices[k];
            const Eigen::Vector2d facet = vk - vj;
            const std::vector<RVector> cut = parallel_cut_points(x, i, chart);
            ASSERT_EQ(cut.size(), 2u);
            const std::size_t first = std::min(j, k);
            const std::size_t second = std::max(j, k);
            const Eigen::Vector2d hit_first = intersect(x, facet, chart.vertices[first], vi - chart.vertices[first]);
            const Eigen::Vector2d hit_second = intersect(x, facet, chart.vertices[second], vi - chart.vertices[second]);
            EXPECT_LE((cut[0] - hit_first).norm(), 1e-12);
            EXPECT_LE((cut[1] - hit_second).norm(), 1e-12);
            EXPECT_NEAR((cut[0] - RVector(chart.vertices[first])).norm(), p.probs[i], 1e-12);
            EXPECT_NEAR((cut[1] - RVector(chart.vertices[second])).norm(), p.probs[i], 1e-12);
        }
    }
}

TEST(parallel_cuts, ququart_matches_plane_intersection) {
    std::mt19937_64 rng(44);
    const SimplexChart chart = build_chart(4);
    for (int trial = 0; trial < 100; ++trial) {
        const ProbabilityVector p = random_probs(rng, 4);
        const Eigen::Vector3d x = simplex_point(p, chart);
        for (std::size_t i = 0; i < 4; ++i) {
            std::vector<std::size_t> others;
            for (std::size_t j = 0; j < 4; ++j)
                if (j != i) others.push_back(j);
            const Eigen::Vector3d a = chart.vertices[others[0]], b = chart.vertices[others[1]],
                                  c = chart.vertices[others[2]], vi = chart.vertices[i];
            const Eigen::Vector3d n = (b - a).cross(c - a);
            const std::vector<RVector> cut = parallel_cut_points(x, i, chart);
            ASSERT_EQ(cut.size(), 3u);
            for (std::size_t m = 0; m < 3; ++m) {
                const Eigen::Vector3d vj = chart.vertices[others[m]];
                const double s = n.dot(x - vj) / n.dot(vi - vj);
                EXPECT_LE((cut[m] - RVector(vj + s * (vi - vj))).norm(), 1e-12);
                EXPECT_NEAR(s, p.probs[i], 1e-12);
            }
        }
    }
    EXPECT_THROW(parallel_cut_points(RVector::Zero(3), 4, chart), Error);
}

TEST(scene_orientation, orthonormal_with_first_edge_on_x) {
    for (std::size_t d = 2; d <= 6; ++d) {
        const SimplexChart chart = build_chart(d);
        const RMatrix f = scene_orientation(chart);
        const auto n = static_cast<Eigen::Index>(d - 1);
        EXPECT_LE((f * f.transpose() - RMatrix::Identity(n, n)).norm(), 1e-12);
        const RVector e0 = f * (chart.vertices[0] - chart.vertices.back());
        EXPECT_NEAR(e0(0), 1.0, 1e-12);
    }
}

TEST(make_probability_vector, rejects_bad_input) {
    EXPECT_THROW(make_probability_vector({}), Error);
    EXPECT_THROW(make_probability_vector({0.5, 0.6}), Error);
    EXPECT_THROW(make_probability_vector({1.5, -0.5}), Error);
    EXPECT_THROW(make_probability_vector({std::nan(""), 1.0}), Error);
    EXPECT_EQ(make_probability_vector({1.0 + 1e-12, -1e-12}).probs, (std::vector<double>{1.0, 0.0}));
}
