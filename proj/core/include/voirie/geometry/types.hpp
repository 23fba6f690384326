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

#ifndef VOIRIE_GEOMETRY_TYPES_HPP
#define VOIRIE_GEOMETRY_TYPES_HPP

/// @file types.hpp
/// Planar 2-D geometry value types.
///
/// Coordinates are meters in a projected map CRS (east = x, north = y).
/// Geodesic (lat/lon) computation is out of scope; ingestion rejects inputs
/// that look geographic.
///
/// Ring convention: rings are stored CLOSED (last vertex repeats the first).
/// For a valid AreaGeometry, outer rings wind counter-clockwise and inner
/// rings (holes) clockwise.  `make_valid` establishes this convention.

#include <vector>

namespace voirie::geom {

/// Coincident-vertex cleanup threshold, chosen for centimeter-grade survey
/// data: vertices closer than this are treated as one point.
inline constexpr double snap_tolerance_m = 1e-3;

/// Relative tolerance for area comparisons in conservation identities.
inline constexpr double area_relative_tolerance = 1e-6;

struct Point {
    double x = 0.0;  ///< meters, projected east
    double y = 0.0;  ///< meters, projected north

    friend bool operator==(const Point&, const Point&) = default;
};

/// Closed sequence of points (first vertex repeated at the end).
using Ring = std::vector<Point>;

struct PolygonWithHoles {
    Ring outer;
    std::vector<Ring> inners;
};

/// Zero or more polygons.  An empty polygon list is the empty region
/// (area 0); boolean operations produce it freely.
struct AreaGeometry {
    std::vector<PolygonWithHoles> polygons;

    [[nodiscard]] bool empty() const noexcept { return polygons.empty(); }
};

/// An open path of at least two distinct vertices with positive length.
///
/// The constructor drops consecutive vertices closer than snap_tolerance_m
/// and rejects anything that does not leave a real path, so a constructed
/// Polyline always satisfies the invariants.
class Polyline {
public:
    /// @throws Error{invalid_shape} fewer than 2 distinct vertices remain
    ///         after snapping, or a coordinate is not finite.
    explicit Polyline(std::vector<Point> vertices);

    [[nodiscard]] const std::vector<Point>& vertices() const noexcept { return vertices_; }

private:
    std::vector<Point> vertices_;
};

}  // namespace voirie::geom

#endif  // VOIRIE_GEOMETRY_TYPES_HPP
