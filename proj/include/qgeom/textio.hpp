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

#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qgeom/densmat.hpp"
#include "qgeom/embedding.hpp"
#include "qgeom/leaves.hpp"
#include "qgeom/measurement.hpp"
#include "qgeom/mixtures.hpp"
#include "qgeom/purestate.hpp"

// Plain-text formats. Complex numbers are written `re+imi` / `re-imi`;
// the full-precision writers use 17 significant digits so that parsing
// the output reproduces every double bit for bit.

namespace qgeom::textio {

inline constexpr int kExactDigits = 17;

std::string format_real(double x, int digits = kExactDigits);
std::string format_complex(std::complex<double> z, int digits = kExactDigits);
/// Accepts `re+imi`, `re-imi`, or a bare real. ParseError otherwise.
std::complex<double> parse_complex(std::string_view token);
double parse_real(std::string_view token);

/// `d` on the first line, then d rows of d complex entries.
std::string format_matrix(const CMatrix& m, int digits = kExactDigits);
CMatrix parse_matrix(std::string_view text);
DensityMatrix parse_density(std::string_view text, const Tolerances& tol = {});
inline std::string format_density(const DensityMatrix& rho, int digits = kExactDigits) {
    return format_matrix(rho.matrix(), digits);
}

/// One line: `d c_1 ... c_{d^2-1}`.
std::string format_statepoint(const StatePoint& p, int digits = kExactDigits);
StatePoint parse_statepoint(std::string_view text);

/// Line 1: the d diagonal probabilities. Line 2: `magnitude phase` for
/// each off-diagonal element in row-major order.
std::string format_leaf(const LeafCoordinates& leaf, int digits = kExactDigits);
LeafCoordinates parse_leaf(std::string_view text, const Tolerances& tol = {});

/// d lines, one amplitude each.
std::string format_ket(const PureKet& psi, int digits = kExactDigits);
PureKet parse_ket(std::string_view text, const Tolerances& tol = {});

struct EnsembleEntry {
    double weight;
    std::string matrix_text;
};

/// One component per line: `weight path`, path relative to `base_dir`.
/// Blank lines and lines starting with '#' are skipped.
std::vector<EnsembleEntry> read_ensemble_entries(std::string_view text, const std::filesystem::path& base_dir);
WeightedEnsemble parse_ensemble(std::string_view text, const std::filesystem::path& base_dir,
                                const Tolerances& tol = {});

/// Repeated blocks of a unitary (matrix format, columns are the basis
/// vectors) followed by one line of d probabilities.
TomographyRecord parse_tomography(std::string_view text, const Tolerances& tol = {});
std::string format_tomography(const TomographyRecord& record, int digits = kExactDigits);

std::string read_file(const std::filesystem::path& path);

}  // namespace qgeom::textio
