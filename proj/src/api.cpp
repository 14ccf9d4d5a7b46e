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

#include "qgeom/api.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include <fmt/format.h>

#include "qgeom/densmat.hpp"
#include "qgeom/embedding.hpp"
#include "qgeom/error.hpp"
#include "qgeom/leaves.hpp"
#include "qgeom/measurement.hpp"
#include "qgeom/mixtures.hpp"
#include "qgeom/scene.hpp"
#include "qgeom/statevectors.hpp"
#include "qgeom/textio.hpp"

namespace qgeom::api {

namespace {

using nlohmann::json;
using Handler = std::function<json(const json&, const Tolerances&)>;

constexpr int kTextDigits = 12;
constexpr double kTextZero = 5e-13;

const json& field(const json& request, const char* name) {
    if (!request.is_object() || !request.contains(name))
        throw Error(ErrorCode::ParseError, fmt::format("request is missing '{}'", name));
    return request.at(name);
}

double number(const json& j, const char* what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf" || s == "infinity" || s == "+inf") return std::numeric_limits<double>::infinity();
    }
    throw Error(ErrorCode::ParseError, fmt::format("'{}' is not a number", what));
}

std::size_t dimension(const json& j) {
    if (!j.is_number_integer() || j.get<long long>() < 1) throw Error(ErrorCode::ParseError, "'d' must be a positive integer");
    return static_cast<std::size_t>(j.get<long long>());
}

DensityMatrix density(const json& request, const char* name, const Tolerances& tol) {
    return validate_density(matrix_from_json(field(request, name)), tol);
}

MeasurementBasis basis_or_default(const json& request, std::size_t d, const Tolerances& tol) {
    if (request.contains("basis")) return MeasurementBasis(matrix_from_json(request.at("basis")), tol);
    return MeasurementBasis::computational(d);
}

json vec(const std::vector<double>& v) { return json(v); }
json vec(const RVector& v) { return json(std::vector<double>(v.data(), v.data() + v.size())); }

json metrics_json(const HierarchyMetrics& m) {
    return {{"r_Md", m.r_Md}, {"r_d", m.r_d}, {"r_succ", m.r_succ},
            {"theta_d", m.theta_d}, {"theta_Md", m.theta_Md}, {"theta_succ", m.theta_succ}};
}

TomographyRecord record_from_json(const json& request, const Tolerances& tol) {
    if (request.contains("record")) {
        if (!request.at("record").is_string()) throw Error(ErrorCode::ParseError, "'record' must be text");
        return textio::parse_tomography(request.at("record").get<std::string>(), tol);
    }
    const json& bases = field(request, "bases");
    const json& data = field(request, "data");
    if (!bases.is_array() || !data.is_array()) throw Error(ErrorCode::ParseError, "'bases' and 'data' must be arrays");
    TomographyRecord record;
    for (const json& b : bases) record.bases.emplace_back(matrix_from_json(b), tol);
    Tolerances loose = tol;
    loose.validation = std::max(tol.validation, 1e-9);
    for (const json& p : data) {
        if (!p.is_array()) throw Error(ErrorCode::ParseError, "each 'data' entry must be an array");
        std::vector<double> probs;
        for (const json& x : p) probs.push_back(number(x, "probability"));
        record.diag_data.push_back(make_probability_vector(std::move(probs), loose));
    }
    return record;
}

json op_validate(const json& req, const Tolerances& tol) {
    const DensityMatrix rho = density(req, "rho", tol);
    return {{"valid", true}, {"dim", rho.dim()}, {"class", to_string(classify(rho, tol))}, {"purity", purity(rho)}};
}

json op_eig(const json& req, const Tolerances& tol) {
    const DensityMatrix rho = density(req, "rho", tol);
    const Spectrum s = eig_hermitian(rho, tol);
    const Entropy e = entropy_and_w(s);
    return {{"eigenvalues", vec(s.eigenvalues)}, {"eigenvectors", matrix_to_json(s.eigenvectors)},
            {"entropy", e.s}, {"W", e.w}, {"purity", purity(rho)}, {"class", to_string(classify(rho, tol))}};
}

json op_distance(const json& req, const Tolerances& tol) {
    const DensityMatrix a = density(req, "a", tol);
    DensityMatrix b = density(req, "b", tol);
    if (req.contains("align")) b = change_basis(b, matrix_from_json(req.at("align")), tol);
    return {{"distance", distance(a, b)}};
}

json op_angle(const json& req, const Tolerances& tol) {
    const double theta = angle(density(req, "a", tol), density(req, "b", tol));
    return {{"angle", theta}, {"degrees", theta * 180.0 / std::numbers::pi}};
}

json op_mix(const json& req, const Tolerances& tol) {
    const json& comps = field(req, "components");
    if (!comps.is_array()) throw Error(ErrorCode::ParseError, "'components' must be an array");
    std::vector<WeightedState> states;
    for (const json& c : comps) states.push_back({number(field(c, "weight"), "weight"), density(c, "rho", tol)});
    const DensityMatrix m = mix(WeightedEnsemble(std::move(states)));
    return {{"rho", matrix_to_json(m.matrix())}, {"statepoint", vec(to_statepoint(m).coords)}};
}

json op_project(const json& req, const Tolerances& tol) {
    const DensityMatrix rho = density(req, "rho", tol);
    return {{"rho", matrix_to_json(project_to_simplex(rho).matrix())}, {"leaf_radius", leaf_radius(rho)}};
}

json op_leaf(const json& req, const Tolerances& tol) {
    const DensityMatrix rho = density(req, "rho", tol);
    const LeafCoordinates leaf = leaf_coordinates(rho, tol);
    json off = json::array();
    for (const PolarEntry& e : leaf.offdiag) off.push_back({e.magnitude, e.phase});
    const LeafDecomposition dec = leaf_decomposition(rho);
    return {{"diag", vec(leaf.diag.probs)}, {"offdiag", off}, {"radius", leaf_radius(rho)},
            {"r_s", dec.r_s}, {"r_c", dec.r_c}, {"r_d", dec.r_d}};
}

json op_measure(const json& req, const Tolerances& tol) {
    const DensityMatrix rho = density(req, "rho", tol);
    return {{"probabilities", vec(measure_probabilities(rho, basis_or_default(req, rho.dim(), tol)).probs)}};
}

json op_decohere(const json& req, const Tolerances& tol) {
    const DensityMatrix rho = density(req, "rho", tol);
    const double gamma = req.contains("gamma") ? number(req.at("gamma"), "gamma") : 1.0;
    const DensityMatrix out = decohere(rho, basis_or_default(req, rho.dim(), tol), number(field(req, "t"), "t"), gamma);
    return {{"rho", matrix_to_json(out.matrix())}, {"statepoint", vec(to_statepoint(out).coords)}};
}

json op_tomo(const json& req, const Tolerances& tol) {
    const Reconstruction r = reconstruct(record_from_json(req, tol), tol);
    return {{"rho", matrix_to_json(r.rho.matrix())}, {"residual", r.residual}};
}

json op_hierarchy(const json& req, const Tolerances&) {
    const std::size_t d = dimension(field(req, "d"));
    return {{"d", d}, {"closed_form", metrics_json(hierarchy_metrics(d))}, {"numeric", metrics_json(hierarchy_metrics_numeric(d))}};
}

json op_scene(const json& req, const Tolerances& tol) {
    const DensityMatrix rho = density(req, "rho", tol);
    const std::string kind = req.contains("kind") ? req.at("kind").get<std::string>() : std::string("auto");
    SceneDocument doc;
    if (kind == "bloch" || (kind == "auto" && rho.dim() == 2)) {
        if (rho.dim() != 2) throw Error(ErrorCode::WrongDimension, "bloch scenes need d = 2");
        doc = scene_bloch(rho, basis_or_default(req, 2, tol));
    } else if (kind == "simplex2" || kind == "simplex3" || kind == "auto") {
        const std::size_t want = kind == "simplex2" ? 3 : kind == "simplex3" ? 4 : rho.dim();
        if (rho.dim() != want) throw Error(ErrorCode::WrongDimension, fmt::format("{} scenes need d = {}", kind, want));
        doc = scene_simplex(rho, tol);
    } else {
        throw Error(ErrorCode::ParseError, fmt::format("unknown scene kind '{}'", kind));
    }
    return json(doc);
}

json op_statepoint(const json& req, const Tolerances& tol) {
    const StatePoint p = to_statepoint(density(req, "rho", tol));
    return {{"d", p.dim}, {"coords", vec(p.coords)}, {"origin_radius", origin_radius(density(req, "rho", tol))}};
}

json op_from_statepoint(const json& req, const Tolerances& tol) {
    StatePoint p;
    p.dim = dimension(field(req, "d"));
    const json& coords = field(req, "coords");
    if (!coords.is_array()) throw Error(ErrorCode::ParseError, "'coords' must be an array");
    p.coords.resize(static_cast<Eigen::Index>(coords.size()));
    for (std::size_t k = 0; k < coords.size(); ++k) p.coords(static_cast<Eigen::Index>(k)) = number(coords[k], "coordinate");
    return {{"rho", matrix_to_json(from_statepoint(p, tol).matrix())}};
}

const std::map<std::string, Handler, std::less<>>& handlers() {
    static const std::map<std::string, Handler, std::less<>> table = {
        {"validate", op_validate}, {"eig", op_eig},         {"distance", op_distance},
        {"angle", op_angle},       {"mix", op_mix},         {"project", op_project},
        {"leaf", op_leaf},         {"measure", op_measure}, {"decohere", op_decohere},
        {"tomo", op_tomo},         {"hierarchy", op_hierarchy}, {"scene", op_scene},
        {"statepoint", op_statepoint}, {"from_statepoint", op_from_statepoint},
    };
    return table;
}

std::string num(double x) {
    if (std::abs(x) < kTextZero) x = 0.0;
    return textio::format_real(x, kTextDigits);
}

std::string text_matrix(const json& m) {
    const CMatrix c = matrix_from_json(m);
    CMatrix snapped = c;
    for (Eigen::Index i = 0; i < c.rows(); ++i)
        for (Eigen::Index j = 0; j < c.cols(); ++j) {
            double re = c(i, j).real(), im = c(i, j).imag();
            if (std::abs(re) < kTextZero) re = 0.0;
            if (std::abs(im) < kTextZero) im = 0.0;
            snapped(i, j) = {re, im};
        }
    return textio::format_matrix(snapped, kTextDigits);
}

std::string text_list(const json& values) {
    std::string out;
    for (const json& v : values) out += (out.empty() ? "" : " ") + num(v.get<double>());
    return out + "\n";
}

}  // namespace

const std::vector<std::string>& operations() {
    static const std::vector<std::string> ops = {"validate", "eig",     "distance", "angle",     "mix",
                                                 "project",  "leaf",    "measure",  "decohere",  "tomo",
                                                 "hierarchy", "scene",  "statepoint", "from_statepoint"};
    return ops;
}

json call(std::string_view op, const json& request, const Tolerances& tol) {
    const auto& table = handlers();
    const auto it = table.find(op);
    if (it == table.end()) throw Error(ErrorCode::ParseError, fmt::format("unknown operation '{}'", op));
    try {
        return it->second(request, tol);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

std::string dump(const json& response) { return response.dump(); }

json error_body(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e))
        return {{"error", {{"code", std::string(to_string(err->code()))}, {"message", err->what()}, {"residual", err->residual()}}}};
    return {{"error", {{"code", "Internal"}, {"message", e.what()}, {"residual", 0.0}}}};
}

json matrix_to_json(const CMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const json& j) {
    if (j.is_string()) return textio::parse_matrix(j.get<std::string>());
    if (!j.is_array() || j.empty()) throw Error(ErrorCode::ParseError, "matrix must be text or a non-empty array of rows");
    const auto n = static_cast<Eigen::Index>(j.size());
    CMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
            throw Error(ErrorCode::ParseError, "matrix rows must be arrays of length d");
        for (Eigen::Index k = 0; k < n; ++k) {
            const json& e = row[static_cast<std::size_t>(k)];
            if (e.is_number()) {
                m(i, k) = e.get<double>();
            } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
                m(i, k) = {e[0].get<double>(), e[1].get<double>()};
            } else if (e.is_string()) {
                m(i, k) = textio::parse_complex(e.get<std::string>());
            } else {
                throw Error(ErrorCode::ParseError, "matrix entries must be numbers, [re, im] pairs or strings");
            }
        }
    }
    return m;
}

std::string render_text(std::string_view op, const json& r) {
    if (op == "validate")
        return fmt::format("valid d={} class={} purity={}\n", r.at("dim").get<std::size_t>(),
                           r.at("class").get<std::string>(), num(r.at("purity").get<double>()));
    if (op == "eig")
        return "eigenvalues " + text_list(r.at("eigenvalues")) + "eigenvectors\n" + text_matrix(r.at("eigenvectors")) +
               fmt::format("entropy {}\nW {}\npurity {}\nclass {}\n", num(r.at("entropy").get<double>()),
                           num(r.at("W").get<double>()), num(r.at("purity").get<double>()),
                           r.at("class").get<std::string>());
    if (op == "distance") return num(r.at("distance").get<double>()) + "\n";
    if (op == "angle")
        return fmt::format("{} rad {} deg\n", num(r.at("angle").get<double>()), num(r.at("degrees").get<double>()));
    if (op == "mix" || op == "decohere" || op == "from_statepoint") return text_matrix(r.at("rho"));
    if (op == "project") return text_matrix(r.at("rho")) + "leaf_radius " + num(r.at("leaf_radius").get<double>()) + "\n";
    if (op == "leaf") {
        std::string pairs;
        for (const json& p : r.at("offdiag")) pairs += (pairs.empty() ? "" : " ") + num(p[0].get<double>()) + " " + num(p[1].get<double>());
        return text_list(r.at("diag")) + pairs + "\n" +
               fmt::format("radius {}\nr_s {}\nr_c {}\nr_d {}\n", num(r.at("radius").get<double>()), num(r.at("r_s").get<double>()),
                           num(r.at("r_c").get<double>()), num(r.at("r_d").get<double>()));
    }
    if (op == "measure") return text_list(r.at("probabilities"));
    if (op == "tomo") return text_matrix(r.at("rho")) + "residual " + num(r.at("residual").get<double>()) + "\n";
    if (op == "statepoint") {
        std::string out = std::to_string(r.at("d").get<std::size_t>());
        for (const json& c : r.at("coords")) out += " " + num(c.get<double>());
        return out + "\n";
    }
    if (op == "hierarchy") {
        const json& cf = r.at("closed_form");
        const json& nu = r.at("numeric");
        std::string out = fmt::format("d = {}\n{:<12}{:<20}{:<20}{}\n", r.at("d").get<std::size_t>(), "quantity", "closed_form", "numeric", "degrees");
        for (const char* key : {"r_Md", "r_d", "r_succ", "theta_d", "theta_Md", "theta_succ"}) {
            const double c = cf.at(key).get<double>();
            const bool is_angle = std::string_view(key).starts_with("theta");
            out += fmt::format("{:<12}{:<20}{:<20}{}\n", key, num(c), num(nu.at(key).get<double>()),
                               is_angle ? num(c * 180.0 / std::numbers::pi) : std::string("-"));
        }
        return out;
    }
    return r.dump(2) + "\n";
}

}  // namespace qgeom::api
