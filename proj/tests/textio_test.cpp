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

#include "qgeom/textio.hpp"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>

#include "gtest/gtest.h"

#include "qgeom/error.hpp"
#include "support/random_states.hpp"

using namespace qgeom;

TEST(textio, parse_complex_forms) {
    EXPECT_EQ(textio::parse_complex("0.5+0.0i"), std::complex<double>(0.5, 0.0));
    EXPECT_EQ(textio::parse_complex("-0.5-0.25i"), std::complex<double>(-0.5, -0.25));
    EXPECT_EQ(textio::parse_complex("1e-05+2.5e-17i"), std::complex<double>(1e-05, 2.5e-17));
    EXPECT_EQ(textio::parse_complex("1E+02-3E-02i"), std::complex<double>(100.0, -0.03));
    EXPECT_EQ(textio::parse_complex("0.25"), std::complex<double>(0.25, 0.0));
    EXPECT_THROW(textio::parse_complex("abc"), Error);
    EXPECT_THROW(textio::parse_complex("1+i"), Error);
    EXPECT_THROW(textio::parse_complex("0.5i"), Error);
}

TEST(textio, matrix_format_shape) {
    EXPECT_EQ(textio::format_density(qgeom::testing::worked_example()),
              "2\n0.5+0i 0.16666666666666666+0i\n0.16666666666666666+0i 0.5+0i\n");
    EXPECT_THROW(textio::parse_matrix("2\n1+0i 0+0i\n0+0i\n"), Error);
    EXPECT_THROW(textio::parse_matrix("2\n1 0\n0 0\n5\n"), Error);
    EXPECT_THROW(textio::parse_matrix("x\n"), Error);
}

// Property: 17 significant digits round-trip every double exactly.
TEST(textio, density_round_trip_is_bit_exact) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const DensityMatrix rho = qgeom::testing::varied_state(rng, qgeom::testing::random_dim(rng, 2, 8));
        const DensityMatrix back = textio::parse_density(textio::format_density(rho));
        ASSERT_EQ(std::memcmp(back.matrix().data(), rho.matrix().data(), sizeof(std::complex<double>) * rho.matrix().size()), 0);
    }
}

TEST(textio, statepoint_leaf_and_ket_round_trip) {
    std::mt19937_64 rng(22);
    const DensityMatrix rho = random_density(rng, 3);
    const StatePoint p = to_statepoint(rho);
    const StatePoint q = textio::parse_statepoint(textio::format_statepoint(p));
    EXPECT_EQ(q.dim, 3u);
    EXPECT_EQ(q.coords, p.coords);
    const std::string text = textio::format_statepoint(p);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);

    const LeafCoordinates leaf = leaf_coordinates(rho);
    const LeafCoordinates back = textio::parse_leaf(textio::format_leaf(leaf));
    EXPECT_EQ(back.diag.probs, leaf.diag.probs);
    ASSERT_EQ(back.offdiag.size(), 3u);
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_EQ(back.offdiag[k].magnitude, leaf.offdiag[k].magnitude);
        EXPECT_EQ(back.offdiag[k].phase, leaf.offdiag[k].phase);
    }

    const PureKet psi(random_ket(rng, 4));
    EXPECT_EQ(textio::parse_ket(textio::format_ket(psi)).amps(), psi.amps());
}

TEST(textio, ensemble_file_resolves_relative_paths) {
    const auto dir = std::filesystem::temp_directory_path() / "qgeom_textio_ensemble";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "up.txt") << "2\n1+0i 0+0i\n0+0i 0+0i\n";
    std::ofstream(dir / "down.txt") << "2\n0+0i 0+0i\n0+0i 1+0i\n";
    const WeightedEnsemble e = textio::parse_ensemble("# comment\n0.7 up.txt\n\n0.3 down.txt\n", dir);
    ASSERT_EQ(e.components().size(), 2u);
    EXPECT_DOUBLE_EQ(mix(e)(0, 0).real(), 0.7);
    EXPECT_THROW(textio::parse_ensemble("0.7\n", dir), Error);
    EXPECT_THROW(textio::parse_ensemble("1 missing.txt\n", dir), Error);
}

TEST(textio, tomography_record_round_trip) {
    std::mt19937_64 rng(23);
    const DensityMatrix rho = random_density(rng, 3);
    const TomographyRecord rec = simulate_record(rho, default_tomography_bases(3));
    const TomographyRecord back = textio::parse_tomography(textio::format_tomography(rec));
    ASSERT_EQ(back.bases.size(), rec.bases.size());
    for (std::size_t b = 0; b < rec.bases.size(); ++b) {
        EXPECT_EQ(back.bases[b].unitary(), rec.bases[b].unitary());
        EXPECT_EQ(back.diag_data[b].probs, rec.diag_data[b].probs);
    }
    EXPECT_THROW(textio::parse_tomography(""), Error);
    EXPECT_THROW(textio::parse_tomography("2\n1 0\n0 1\n0.5\n"), Error);
}
