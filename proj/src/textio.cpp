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

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "qgeom/error.hpp"

namespace qgeom::textio {

namespace {

std::vector<std::string_view> tokens(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

std::vector<std::string_view> lines(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        out.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

class TokenCursor {
  public:
    explicit TokenCursor(std::string_view text) : toks_(tokens(text)) {}

    bool done() const { return pos_ >= toks_.size(); }
    std::string_view next(const char* what) {
        if (done()) throw Error(ErrorCode::ParseError, fmt::format("unexpected end of input, expected {}", what));
        return toks_[pos_++];
    }
    std::size_t next_dim() {
        const std::string_view t = next("dimension");
        std::size_t d = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), d);
        if (ec != std::errc() || ptr != t.data() + t.size() || d == 0)
            throw Error(ErrorCode::ParseError, fmt::format("bad dimension '{}'", t));
        return d;
    }

  private:
    std::vector<std::string_view> toks_;
    std::size_t pos_ = 0;
};

CMatrix read_matrix(TokenCursor& cur) {
    const std::size_t d = cur.next_dim();
    if (d > 4096) throw Error(ErrorCode::ParseError, fmt::format("dimension {} is not plausible", d));
    const auto n = static_cast<Eigen::Index>(d);
    CMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = parse_complex(cur.next("matrix entry"));
    return m;
}

}  // namespace

std::string format_real(double x, int digits) { return fmt::format("{:.{}g}", x, digits); }

std::string format_complex(std::complex<double> z, int digits) {
    const double im = z.imag();
    const char sign = std::signbit(im) ? '-' : '+';
    return fmt::format("{:.{}g}{}{:.{}g}i", z.real(), digits, sign, std::abs(im), digits);
}

double parse_real(std::string_view token) {
    std::string_view t = token;
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw Error(ErrorCode::ParseError, fmt::format("bad number '{}'", token));
    return v;
}

std::complex<double> parse_complex(std::string_view token) {
    if (token.empty()) throw Error(ErrorCode::ParseError, "empty complex token");
    if (token.back() != 'i') return {parse_real(token), 0.0};
    const std::string_view body = token.substr(0, token.size() - 1);
    // The split is the last sign that is not a leading sign or part of an exponent.
    for (std::size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            const double re = parse_real(body.substr(0, k));
            double im = parse_real(body.substr(k + 1));
            if (c == '-') im = -im;
            return {re, im};
        }
    }
    throw Error(ErrorCode::ParseError, fmt::format("bad complex number '{}'", token));
}

std::string format_matrix(const CMatrix& m, int digits) {
    std::string out = fmt::format("{}\n", m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ' ';
            out += format_complex(m(i, j), digits);
        }
        out += '\n';
    }
    return out;
}

CMatrix parse_matrix(std::string_view text) {
    TokenCursor cur(text);
    CMatrix m = read_matrix(cur);
    if (!cur.done()) throw Error(ErrorCode::ParseError, "trailing tokens after matrix");
    return m;
}

DensityMatrix parse_density(std::string_view text, const Tolerances& tol) {
    return validate_density(parse_matrix(text), tol);
}

std::string format_statepoint(const StatePoint& p, int digits) {
    std::string out = fmt::format("{}", p.dim);
    for (Eigen::Index k = 0; k < p.coords.size(); ++k) out += ' ' + format_real(p.coords(k), digits);
    out += '\n';
    return out;
}

StatePoint parse_statepoint(std::string_view text) {
    TokenCursor cur(text);
    StatePoint p;
    p.dim = cur.next_dim();
    if (p.dim > 4096) throw Error(ErrorCode::ParseError, "implausible dimension");
    const auto count = static_cast<Eigen::Index>(p.dim * p.dim - 1);
    p.coords.resize(count);
    for (Eigen::Index k = 0; k < count; ++k) p.coords(k) = parse_real(cur.next("coordinate"));
    if (!cur.done()) throw Error(ErrorCode::ParseError, "trailing tokens after statepoint");
    return p;
}

std::string format_leaf(const LeafCoordinates& leaf, int digits) {
    std::string out;
    for (std::size_t i = 0; i < leaf.diag.probs.size(); ++i) {
        if (i > 0) out += ' ';
        out += format_real(leaf.diag.probs[i], digits);
    }
    out += '\n';
    for (std::size_t k = 0; k < leaf.offdiag.size(); ++k) {
        if (k > 0) out += ' ';
        out += format_real(leaf.offdiag[k].magnitude, digits) + ' ' + format_real(leaf.offdiag[k].phase, digits);
    }
    out += '\n';
    return out;
}

LeafCoordinates parse_leaf(std::string_view text, const Tolerances& tol) {
    std::vector<std::string_view> rows;
    for (std::string_view l : lines(text))
        if (!tokens(l).empty()) rows.push_back(l);
    if (rows.empty()) throw Error(ErrorCode::ParseError, "empty leaf coordinates");
    std::vector<double> diag;
    for (std::string_view t : tokens(rows[0])) diag.push_back(parse_real(t));
    const std::size_t d = diag.size();
    const std::vector<std::string_view> rest = rows.size() > 1 ? tokens(rows[1]) : std::vector<std::string_view>{};
    if (rows.size() > 2 || rest.size() != d * (d - 1))
        throw Error(ErrorCode::ParseError, fmt::format("expected {} magnitude/phase pairs", d * (d - 1) / 2));
    LeafCoordinates leaf{make_probability_vector(std::move(diag), tol), {}};
    for (std::size_t k = 0; k < rest.size(); k += 2) leaf.offdiag.push_back({parse_real(rest[k]), parse_real(rest[k + 1])});
    return leaf;
}

std::string format_ket(const PureKet& psi, int digits) {
    std::string out;
    for (Eigen::Index i = 0; i < psi.amps().size(); ++i) out += format_complex(psi.amps()(i), digits) + '\n';
    return out;
}

PureKet parse_ket(std::string_view text, const Tolerances& tol) {
    const std::vector<std::string_view> toks = tokens(text);
    CVector amps(static_cast<Eigen::Index>(toks.size()));
    for (std::size_t i = 0; i < toks.size(); ++i) amps(static_cast<Eigen::Index>(i)) = parse_complex(toks[i]);
    return PureKet(std::move(amps), tol);
}

std::vector<EnsembleEntry> read_ensemble_entries(std::string_view text, const std::filesystem::path& base_dir) {
    std::vector<EnsembleEntry> out;
    for (std::string_view line : lines(text)) {
        const std::vector<std::string_view> toks = tokens(line);
        if (toks.empty() || toks.front().front() == '#') continue;
        if (toks.size() != 2) throw Error(ErrorCode::ParseError, fmt::format("ensemble line '{}' is not 'weight path'", line));
        std::filesystem::path p{std::string(toks[1])};
        if (p.is_relative()) p = base_dir / p;
        out.push_back({parse_real(toks[0]), read_file(p)});
    }
    return out;
}

WeightedEnsemble parse_ensemble(std::string_view text, const std::filesystem::path& base_dir, const Tolerances& tol) {
    std::vector<WeightedState> components;
    for (const EnsembleEntry& e : read_ensemble_entries(text, base_dir))
        components.push_back({e.weight, parse_density(e.matrix_text, tol)});
    return WeightedEnsemble(std::move(components));
}

TomographyRecord parse_tomography(std::string_view text, const Tolerances& tol) {
    TokenCursor cur(text);
    TomographyRecord record;
    while (!cur.done()) {
        const CMatrix u = read_matrix(cur);
        record.bases.emplace_back(u, tol);
        std::vector<double> p(static_cast<std::size_t>(u.rows()));
        for (double& x : p) x = parse_real(cur.next("probability"));
        Tolerances loose = tol;
        loose.validation = std::max(tol.validation, 1e-9);
        record.diag_data.push_back(make_probability_vector(std::move(p), loose));
    }
    if (record.bases.empty()) throw Error(ErrorCode::EmptyRecord, "tomography file has no bases");
    return record;
}

std::string format_tomography(const TomographyRecord& record, int digits) {
    std::string out;
    for (std::size_t b = 0; b < record.bases.size(); ++b) {
        out += format_matrix(record.bases[b].unitary(), digits);
        const auto& p = record.diag_data[b].probs;
        for (std::size_t i = 0; i < p.size(); ++i) out += (i > 0 ? " " : "") + format_real(p[i], digits);
        out += '\n';
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, fmt::format("cannot read '{}'", path.string()));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qgeom::textio
