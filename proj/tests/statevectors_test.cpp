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

#include "qgeom/statevectors.hpp"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "qgeom/embedding.hpp"
#include "qgeom/error.hpp"

using namespace qgeom;

namespace {
constexpr double kDeg = 180.0 / std::numbers::pi;
}

TEST(hierarchy_metrics, examples) {
    EXPECT_NEAR(hierarchy_metrics(2).theta_d * kDeg, 180.0, 1e-9);
    EXPECT_NEAR(hierarchy_metrics(3).theta_d * kDeg, 120.0, 1e-9);
    EXPECT_NEAR(hierarchy_metrics(4).theta_d * kDeg, 109.4712206, 1e-6);
    EXPECT_NEAR(hierarchy_metrics(2).theta_Md * kDeg, 45.0, 1e-9);
    EXPECT_NEAR(hierarchy_metrics(2).r_Md, 0.5, 1e-16);
    EXPECT_NEAR(hierarchy_metrics(2).r_d, 0.5, 1e-16);
    EXPECT_THROW(hierarchy_metrics(1), Error);
}

TEST(hierarchy_metrics, closed_form_matches_numeric) {
    for (std::size_t d = 2; d <= 8; ++d) {
        const HierarchyMetrics c = hierarchy_metrics(d);
        const HierarchyMetrics n = hierarchy_metrics_numeric(d);
        EXPECT_NEAR(c.r_Md, n.r_Md, 1e-12) << d;
        EXPECT_NEAR(c.r_d, n.r_d, 1e-12) << d;
        EXPECT_NEAR(c.r_succ, n.r_succ, 1e-12) << d;
        EXPECT_NEAR(c.theta_d, n.theta_d, 1e-9) << d;
        EXPECT_NEAR(c.theta_Md, n.theta_Md, 1e-9) << d;
        EXPECT_NEAR(c.theta_succ, n.theta_succ, 1e-9) << d;
    }
}

TEST(hierarchy_metrics, right_triangles) {
    for (std::size_t d = 2; d <= 50; ++d) {
        const HierarchyMetrics m = hierarchy_metrics(d);
        const HierarchyMetrics next = hierarchy_metrics(d + 1);
        EXPECT_NEAR(m.r_Md * m.r_Md + m.r_d * m.r_d, 0.5, 1e-14);
        EXPECT_NEAR(next.r_Md * next.r_Md + m.r_succ * m.r_succ, m.r_Md * m.r_Md, 1e-14);
        EXPECT_NEAR(std::cos(m.theta_succ), next.r_Md / m.r_Md, 1e-12);
        EXPECT_NEAR(std::cos(m.theta_Md), m.r_Md / std::sqrt(0.5), 1e-12);
    }
}

TEST(hierarchy_metrics, monotone_limits) {
    double prev_theta = 10.0, prev_r = 10.0, prev_succ = 10.0, prev_md = -1.0;
    for (std::size_t d = 2; d <= 1000000; d = d < 64 ? d + 1 : d * 2) {
        const HierarchyMetrics m = hierarchy_metrics(d);
        EXPECT_LT(m.theta_d, prev_theta);
        EXPECT_GT(m.theta_d, std::numbers::pi / 2);
        EXPECT_LT(m.r_Md, prev_r);
        EXPECT_LT(m.theta_succ, prev_succ);
        EXPECT_GT(m.theta_Md, prev_md);
        EXPECT_LT(m.theta_Md, std::numbers::pi / 2);
        prev_theta = m.theta_d;
        prev_r = m.r_Md;
        prev_succ = m.theta_succ;
        prev_md = m.theta_Md;
    }
    const HierarchyMetrics big = hierarchy_metrics(1000000);
    EXPECT_NEAR(big.theta_d, std::numbers::pi / 2, 1e-5);
    EXPECT_NEAR(big.theta_Md, std::numbers::pi / 2, 1e-2);
    EXPECT_LT(big.r_Md, 1e-3);
}

TEST(cross_level_distance, examples) {
    EXPECT_NEAR(cross_level_distance(3, 2), 1.0 / (2.0 * std::sqrt(3.0)), 1e-16);
    EXPECT_NEAR(cross_level_distance(3, 2), distance(embed_in_dimension(maximally_mixed(2), 3), maximally_mixed(3)), 1e-15);
    EXPECT_EQ(cross_level_distance(4, 4), 0.0);
    EXPECT_NEAR(cross_level_distance(4, 1), std::sqrt(0.5 - 0.125), 1e-16);
    for (std::size_t d = 2; d <= 8; ++d)
        for (std::size_t dp = 1; dp <= d; ++dp)
            EXPECT_NEAR(cross_level_distance(d, dp),
                        distance(embed_in_dimension(maximally_mixed(dp), d), maximally_mixed(d)), 1e-14);
    EXPECT_THROW(cross_level_distance(2, 3), Error);
    EXPECT_THROW(cross_level_distance(2, 0), Error);
}

TEST(maximally_mixed, small_dimensions) {
    EXPECT_EQ(maximally_mixed(1).matrix()(0, 0), std::complex<double>(1.0, 0.0));
    EXPECT_THROW(maximally_mixed(0), Error);
}
