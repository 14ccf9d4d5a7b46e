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

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qgeom/config.hpp"
#include "qgeom/hermitian_eigen.hpp"

// JSON request/response layer shared by the CLI (`--format json`) and the
// HTTP service, so both emit the same bytes for the same inputs.
//
// Matrices are accepted either as a string in the text matrix format or
// as an array of rows whose entries are numbers or [re, im] pairs; they
// are emitted as rows of [re, im] pairs.

namespace qgeom::api {

/// Operation names, in the order of the /v1 endpoints.
const std::vector<std::string>& operations();

/// Runs one operation. Throws qgeom::Error (ParseError for malformed
/// requests, the domain code otherwise).
nlohmann::json call(std::string_view op, const nlohmann::json& request, const Tolerances& tol = {});

/// Canonical serialization used for every response body.
std::string dump(const nlohmann::json& response);

/// Human-readable rendering of a response with 12 significant digits.
std::string render_text(std::string_view op, const nlohmann::json& response);

/// {"error": {"code", "message", "residual"}}
nlohmann::json error_body(const std::exception& e);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace qgeom::api
