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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgeom/densmat.hpp"
#include "qgeom/measurement.hpp"

namespace qgeom {

// Serializable figure descriptions. Coordinates are statespace units:
// Bloch views use the generalized Bloch vector (radius 1/2), simplex
// views the regular unit simplex with the last basis state at the origin
// and the first edge along +x. Schema: docs/scene_schema.json.

inline constexpr int kSceneSchemaVersion = 1;

enum class SceneKind { BlochCircle, BlochSphere, Simplex2, Simplex3 };
const char* to_string(SceneKind kind);
SceneKind scene_kind_from_string(const std::string& s);

using Coords = std::vector<double>;

struct ScenePoint {
    std::string label;
    Coords coords;
    std::string style;
    bool operator==(const ScenePoint&) const = default;
};

struct SceneSegment {
    std::string label;
    Coords from;
    Coords to;
    std::optional<double> value;  // the module quantity this segment depicts
    std::string style;
    bool operator==(const SceneSegment&) const = default;
};

struct SceneCircle {
    std::string label;
    Coords center;
    Coords normal;  // empty in 2-d views
    double radius = 0.0;
    std::string style;
    bool operator==(const SceneCircle&) const = default;
};

/// Planar polygon emitted as a triangle fan around vertices[0].
struct ScenePolygon {
    std::string label;
    std::vector<Coords> vertices;
    std::vector<std::array<int, 3>> triangles;
    std::optional<double> value;
    std::string style;
    bool operator==(const ScenePolygon&) const = default;
};

struct SceneAnnotation {
    std::string text;
    Coords anchor;
    bool operator==(const SceneAnnotation&) const = default;
};

struct SceneDocument {
    int schema_version = kSceneSchemaVersion;
    SceneKind kind = SceneKind::BlochCircle;
    std::size_t state_dim = 0;
    std::string digest;  // FNV-1a 64 of the exact text serialization of the source state
    std::vector<ScenePoint> points;
    std::vector<SceneSegment> segments;
    std::vector<SceneCircle> circles;
    std::vector<ScenePolygon> polygons;
    std::vector<SceneAnnotation> annotations;
    bool operator==(const SceneDocument&) const = default;
};

void to_json(nlohmann::json& j, const SceneDocument& doc);
void from_json(const nlohmann::json& j, SceneDocument& doc);

/// Qubit figure: outline, basis diameter, statepoint, perpendicular foot,
/// the two diameter segments (their values are the probabilities) and
/// the decoherence leaf through the foot. Planar inputs give a
/// BlochCircle in the (x, z) plane, otherwise a BlochSphere.
/// WrongDimension unless d = 2.
SceneDocument scene_bloch(const DensityMatrix& rho, const MeasurementBasis& basis);

/// Eigenvalue simplex (d = 3: triangle, d = 4: tetrahedron) with the
/// statepoint of the diagonalized state and the parallel cuts through it.
/// WrongDimension unless d is 3 or 4.
SceneDocument scene_simplex(const DensityMatrix& rho, const Tolerances& tol = {});

std::string state_digest(const DensityMatrix& rho);

}  // namespace qgeom
