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

// Internal glue between the public value types and Boost.Geometry models.
// Boost stays an implementation detail of the geometry kernel: nothing in
// the public headers depends on it.

#ifndef VOIRIE_GEOMETRY_BOOST_GLUE_HPP
#define VOIRIE_GEOMETRY_BOOST_GLUE_HPP

#include <cmath>
#include <utility>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/geometries.hpp>
#include <boost/geometry/geometries/point_xy.hpp>

#include "voirie/geometry/types.hpp"

namespace voirie::geom::detail {

namespace bg = boost::geometry;

using BPoint = bg::model::d2::point_xy<double>;
// Counter-clockwise outer / clockwise inner, closed rings: the same
// convention the public types document.
using BRing = bg::model::ring<BPoint, false, true>;
using BPolygon = bg::model::polygon<BPoint, false, true>;
using BMultiPolygon = bg::model::multi_polygon<BPolygon>;
using BLinestring = bg::model::linestring<BPoint>;

inline BRing to_boost(const Ring& ring) {
    BRing out;
    out.reserve(ring.size());
    for (const Point& p : ring) out.emplace_back(p.x, p.y);
    return out;
}

inline Ring from_boost(const BRing& ring) {
    Ring out;
    out.reserve(ring.size());
    for (const BPoint& p : ring) out.push_back({bg::get<0>(p), bg::get<1>(p)});
    return out;
}

inline BMultiPolygon to_boost(const AreaGeometry& g) {
    BMultiPolygon out;
    out.reserve(g.polygons.size());
    for (const PolygonWithHoles& poly : g.polygons) {
        BPolygon bp;
        bp.outer() = to_boost(poly.outer);
        bp.inners().reserve(poly.inners.size());
        for (const Ring& inner : poly.inners) bp.inners().push_back(to_boost(inner));
        out.push_back(std::move(bp));
    }
    return out;
}

inline AreaGeometry from_boost(const BMultiPolygon& mp) {
    AreaGeometry out;
    out.polygons.reserve(mp.size());
    for (const BPolygon& bp : mp) {
        PolygonWithHoles poly;
        poly.outer = from_boost(bp.outer());
        poly.inners.reserve(bp.inners().size());
        for (const BRing& inner : bp.inners()) poly.inners.push_back(from_boost(inner));
        out.polygons.push_back(std::move(poly));
    }
    return out;
}

inline BLinestring to_boost(const Polyline& line) {
    BLinestring out;
    out.reserve(line.vertices().size());
    for (const Point& p : line.vertices()) out.emplace_back(p.x, p.y);
    return out;
}

// Overlay outputs can carry vertices a few ulp apart around touch points;
// feeding those into the next overlay corrupts its topology.  Every boolean
// result goes through this cleanup: consecutive near-duplicate vertices
// dropped, degenerate rings removed, orientation fixed.
inline constexpr double overlay_cleanup_tolerance = 1e-9;

inline BRing cleaned_boost_ring(const BRing& ring, double tol) {
    namespace bg = boost::geometry;
    BRing out;
    for (const BPoint& p : ring) {
        if (!out.empty() && std::hypot(bg::get<0>(p) - bg::get<0>(out.back()),
                                       bg::get<1>(p) - bg::get<1>(out.back())) <= tol) {
            continue;
        }
        out.push_back(p);
    }
    while (out.size() >= 2 &&
           std::hypot(bg::get<0>(out.front()) - bg::get<0>(out.back()),
                      bg::get<1>(out.front()) - bg::get<1>(out.back())) <= tol) {
        out.pop_back();
    }
    if (out.size() < 3) return {};
    out.push_back(out.front());
    return out;
}

inline BMultiPolygon normalized(const BMultiPolygon& in,
                                double tol = overlay_cleanup_tolerance) {
    namespace bg = boost::geometry;
    BMultiPolygon out;
    for (const BPolygon& poly : in) {
        BPolygon cleaned;
        cleaned.outer() = cleaned_boost_ring(poly.outer(), tol);
        if (cleaned.outer().empty()) continue;
        for (const BRing& inner : poly.inners()) {
            BRing ring = cleaned_boost_ring(inner, tol);
            if (!ring.empty()) cleaned.inners().push_back(std::move(ring));
        }
        if (bg::area(cleaned) == 0.0) continue;
        out.push_back(std::move(cleaned));
    }
    bg::correct(out);
    return out;
}

}  // namespace voirie::geom::detail

#endif  // VOIRIE_GEOMETRY_BOOST_GLUE_HPP
