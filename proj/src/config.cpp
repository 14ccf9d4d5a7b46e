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

#include "qgeom/config.hpp"

#include <cstdlib>
#include <string>

namespace qgeom {

namespace {

bool read_positive(const char* name, double& out) {
    const char* raw = std::getenv(name);
    if (raw == nullptr) return false;
    try {
        std::size_t used = 0;
        double v = std::stod(raw, &used);
        if (used == 0 || !(v > 0.0)) return false;
        out = v;
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

Tolerances tolerances_from_env(Tolerances base) {
    double v = 0.0;
    if (read_positive("QGEOM_TOLERANCE", v)) base.validation = v;
    if (read_positive("QGEOM_CLASSIFY_TOLERANCE", v)) base.classification = v;
    if (read_positive("QGEOM_MAX_DIM", v) && v >= 2.0) base.max_dim = static_cast<std::size_t>(v);
    return base;
}

}  // namespace qgeom
