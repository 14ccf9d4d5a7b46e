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

#include "qgeom/scene.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include <fmt/format.h>

#include "qgeom/embedding.hpp"
#include "qgeom/error.hpp"
#include "qgeom/leaves.hpp"
#include "qgeom/simplex.hpp"
#include "qgeom/textio.hpp"

namespace qgeom {

namespace {

using nlohmann::json;

constexpr int kLabelDigits = 12;
constexpr double kPlanarTol = 1e-12;

constexpr double kLabelZero = 5e-13;

// Adding +0.0 turns -0.0 into 0.0.
Coords to_coords(const RVector& v) {
    Coords c(v.data(), v.data() + v.size());
    for (double& x : c) x += 0.0;
    return c;
}

Coords midpoint(const Coords& a, const Coords& b) {
    Coords m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = 0.5 * (a[i] + b[i]);
    return m;
}

std::string label_value(const std::string& name, double v) {
    return name + " = " + textio::format_real(std::abs(v) < kLabelZero ? 0.0 : v, kLabelDigits);
}

json optional_value(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }
std::optional<double> read_optional(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

}  // namespace

const char* to_string(SceneKind kind) {
    switch (kind) {
        case SceneKind::BlochCircle: return "BlochCircle";
        case SceneKind::BlochSphere: return "BlochSphere";
        case SceneKind::Simplex2: return "Simplex2";
        case SceneKind::Simplex3: return "Simplex3";
    }
    return "Unknown";
}

SceneKind scene_kind_from_string(const std::string& s) {
    for (SceneKind k : {SceneKind::BlochCircle, SceneKind::BlochSphere, SceneKind::Simplex2, SceneKind::Simplex3})
        if (s == to_string(k)) return k;
    throw Error(ErrorCode::ParseError, fmt::format("unknown scene kind '{}'", s));
}

void to_json(json& j, const SceneDocument& doc) {
    j = json::object();
    j["schema_version"] = doc.schema_version;
    j["kind"] = to_string(doc.kind);
    j["meta"] = {{"state_dim", doc.state_dim}, {"digest", doc.digest}};
    json points = json::array();
    for (const auto& p : doc.points) points.push_back({{"label", p.label}, {"coords", p.coords}, {"style", p.style}});
    json segments = json::array();
    for (const auto& s : doc.segments)
        segments.push_back({{"label", s.label}, {"from", s.from}, {"to", s.to}, {"value", optional_value(s.value)}, {"style", s.style}});
    json circles = json::array();
    for (const auto& c : doc.circles)
        circles.push_back({{"label", c.label}, {"center", c.center}, {"normal", c.normal}, {"radius", c.radius}, {"style", c.style}});
    json polygons = json::array();
    for (const auto& p : doc.polygons)
        polygons.push_back({{"label", p.label}, {"vertices", p.vertices}, {"triangles", p.triangles}, {"value", optional_value(p.value)}, {"style", p.style}});
    json annotations = json::array();
    for (const auto& a : doc.annotations) annotations.push_back({{"text", a.text}, {"anchor", a.anchor}});
    j["points"] = std::move(points);
    j["segments"] = std::move(segments);
    j["circles"] = std::move(circles);
    j["polygons"] = std::move(polygons);
    j["annotations"] = std::move(annotations);
}

void from_json(const json& j, SceneDocument& doc) {
    doc = SceneDocument{};
    doc.schema_version = j.at("schema_version").get<int>();
    doc.kind = scene_kind_from_string(j.at("kind").get<std::string>());
    doc.state_dim = j.at("meta").at("state_dim").get<std::size_t>();
    doc.digest = j.at("meta").at("digest").get<std::string>();
    for (const auto& p : j.at("points"))
        doc.points.push_back({p.at("label"), p.at("coords").get<Coords>(), p.at("style")});
    for (const auto& s : j.at("segments"))
        doc.segments.push_back({s.at("label"), s.at("from").get<Coords>(), s.at("to").get<Coords>(), read_optional(s.at("value")), s.at("style")});
    for (const auto& c : j.at("circles"))
        doc.circles.push_back({c.at("label"), c.at("center").get<Coords>(), c.at("normal").get<Coords>(), c.at("radius").get<double>(), c.at("style")});
    for (const auto& p : j.at("polygons"))
        doc.polygons.push_back({p.at("label"), p.at("vertices").get<std::vector<Coords>>(),
                                p.at("triangles").get<std::vector<std::array<int, 3>>>(), read_optional(p.at("value")), p.at("style")});
    for (const auto& a : j.at("annotations")) doc.annotations.push_back({a.at("text"), a.at("anchor").get<Coords>()});
}

std::string state_digest(const DensityMatrix& rho) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : textio::format_density(rho)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return fmt::format("fnv1a64:{:016x}", h);
}

SceneDocument scene_bloch(const DensityMatrix& rho, const MeasurementBasis& basis) {
    if (rho.dim() != 2 || basis.dim() != 2)
        throw Error(ErrorCode::WrongDimension, fmt::format("Bloch scenes need d = 2, got d = {}", rho.dim()));

    const ProbabilityVector probs = measure_probabilities(rho, basis);
    const DensityMatrix foot_state = decohere(rho, basis, std::numeric_limits<double>::infinity());
    const DensityMatrix b0 = projector(basis.vector(0));
    const DensityMatrix b1 = projector(basis.vector(1));

    const RVector state = to_statepoint(rho).coords;
    const RVector foot = to_statepoint(foot_state).coords;
    const RVector e0 = to_statepoint(b0).coords;
    const RVector e1 = to_statepoint(b1).coords;
    const double perpendicular = distance(rho, foot_state);
    // Leaf disk: the sphere's cross-section through the foot, normal to the diameter.
    const double leaf_r = std::sqrt(std::max(0.0, 0.25 - foot.squaredNorm()));

    const bool planar = std::abs(state(1)) <= kPlanarTol && std::abs(e0(1)) <= kPlanarTol && std::abs(e1(1)) <= kPlanarTol;
    auto view = [planar](const RVector& v) { return planar ? Coords{v(0) + 0.0, v(2) + 0.0} : to_coords(v); };

    SceneDocument doc;
    doc.kind = planar ? SceneKind::BlochCircle : SceneKind::BlochSphere;
    doc.state_dim = 2;
    doc.digest = state_digest(rho);

    const Coords origin = planar ? Coords{0.0, 0.0} : Coords{0.0, 0.0, 0.0};
    doc.circles.push_back({"outline", origin, Coords{}, 0.5, planar ? "circle" : "sphere"});

    doc.points.push_back({"center", origin, "maximally-mixed"});
    doc.points.push_back({"B0", view(e0), "basis"});
    doc.points.push_back({"B1", view(e1), "basis"});
    doc.points.push_back({"state", view(state), "state"});
    doc.points.push_back({"foot", view(foot), "foot"});

    doc.segments.push_back({"diameter", view(e0), view(e1), std::nullopt, "basis"});
    // The segment between the foot and the far endpoint has length p_i.
    doc.segments.push_back({"p(B0)", view(foot), view(e1), probs.probs[0], "probability"});
    doc.segments.push_back({"p(B1)", view(e0), view(foot), probs.probs[1], "probability"});
    doc.segments.push_back({"perpendicular", view(state), view(foot), perpendicular, "leaf"});

    const RVector axis = (e0 - e1).normalized();
    if (planar) {
        // The leaf disk is edge-on in the (x, z) plane: draw it as a chord.
        const Coords dir{-axis(2), axis(0)};
        const Coords f = view(foot);
        doc.segments.push_back({"leaf", Coords{f[0] - leaf_r * dir[0], f[1] - leaf_r * dir[1]},
                                Coords{f[0] + leaf_r * dir[0], f[1] + leaf_r * dir[1]}, leaf_r, "leaf"});
    } else {
        doc.circles.push_back({"leaf", view(foot), to_coords(axis), leaf_r, "leaf"});
    }

    doc.annotations.push_back({label_value("p(B0)", probs.probs[0]), midpoint(view(foot), view(e1))});
    doc.annotations.push_back({label_value("p(B1)", probs.probs[1]), midpoint(view(e0), view(foot))});
    doc.annotations.push_back({label_value("r_c", perpendicular), midpoint(view(state), view(foot))});
    return doc;
}

SceneDocument scene_simplex(const DensityMatrix& rho, const Tolerances& tol) {
    const std::size_t d = rho.dim();
    if (d != 3 && d != 4)
        throw Error(ErrorCode::WrongDimension, fmt::format("simplex scenes need d = 3 or 4, got d = {}", d));

    const Spectrum spectrum = eig_hermitian(rho, tol);
    Tolerances loose = tol;
    loose.validation = std::max(tol.validation, 1e-9);
    const ProbabilityVector probs = make_probability_vector(spectrum.eigenvalues, loose);
    const std::vector<double> cuts = parallel_cut_lengths(probs);
    const Entropy entropy = entropy_and_w(spectrum);

    const SimplexChart chart = build_chart(d);
    const RMatrix frame = scene_orientation(chart);
    auto view = [&](const RVector& x) { return to_coords(frame * (x - chart.vertices.back())); };

    SceneDocument doc;
    doc.kind = d == 3 ? SceneKind::Simplex2 : SceneKind::Simplex3;
    doc.state_dim = d;
    doc.digest = state_digest(rho);

    for (std::size_t i = 0; i < d; ++i) doc.points.push_back({fmt::format("rho_{}", i + 1), view(chart.vertices[i]), "vertex"});
    const ProbabilityVector uniform{std::vector<double>(d, 1.0 / static_cast<double>(d))};
    doc.points.push_back({"center", view(simplex_point(uniform, chart)), "maximally-mixed"});
    const RVector point = simplex_point(probs, chart);
    doc.points.push_back({"state", view(point), "state"});

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            doc.segments.push_back({fmt::format("edge {}-{}", i + 1, j + 1), view(chart.vertices[i]), view(chart.vertices[j]), 1.0, "edge"});

    for (std::size_t i = 0; i < d; ++i) {
        const std::vector<RVector> hits = parallel_cut_points(point, i, chart);
        const std::string name = fmt::format("p_{}", i + 1);
        // Edge pieces from each far vertex to the cut; their length is p_i.
        std::size_t h = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (j == i) continue;
            doc.segments.push_back({name, view(chart.vertices[j]), view(hits[h++]), cuts[i], "cut-length"});
        }
        if (d == 3) {
            doc.segments.push_back({"cut " + name, view(hits[0]), view(hits[1]), cuts[i], "cut"});
        } else {
            ScenePolygon plane{"cut " + name, {}, {}, cuts[i], "cut"};
            for (const RVector& hit : hits) plane.vertices.push_back(view(hit));
            for (int k = 1; k + 1 < static_cast<int>(plane.vertices.size()); ++k) plane.triangles.push_back({0, k, k + 1});
            doc.polygons.push_back(std::move(plane));
        }
        doc.annotations.push_back({label_value(name, cuts[i]), view(hits[0])});
    }
    doc.annotations.push_back({label_value("W", entropy.w), view(point)});
    return doc;
}

}  // namespace qgeom
