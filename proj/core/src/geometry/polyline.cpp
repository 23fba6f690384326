// Copyright 2026 The Voirie Authors
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

#include <cmath>
#include <utility>

#include "voirie/error.hpp"
#include "voirie/geometry/types.hpp"

namespace voirie::geom {

namespace {

double distance(const Point& a, const Point& b) {
    return std::hypot(b.x - a.x, b.y - a.y);
}

}  // namespace

Polyline::Polyline(std::vector<Point> vertices) {
    for (const Point& p : vertices) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw Error(ErrorKind::invalid_shape, "polyline vertex has a non-finite coordinate");
        }
    }
    // Coincident-vertex cleanup at the snap tolerance.
    vertices_.reserve(vertices.size());
    for (Point& p : vertices) {
        if (!vertices_.empty() && distance(vertices_.back(), p) <= snap_tolerance_m) continue;
        vertices_.push_back(p);
    }
    if (vertices_.size() < 2) {
        throw Error(ErrorKind::invalid_shape,
                    "polyline needs at least 2 distinct vertices (after snapping)");
    }
}

}  // namespace voirie::geom
