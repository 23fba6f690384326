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
#include <string>
#include <utility>
#include <vector>

#include "src/geometry/boost_glue.hpp"
#include "voirie/error.hpp"
#include "voirie/geometry/ops.hpp"

namespace voirie::geom {

namespace {

namespace bg = boost::geometry;
using detail::BLinestring;
using detail::BMultiPolygon;

// Miter truncation factor for sharp joins, as a multiple of the half-width.
constexpr double miter_limit = 5.0;

void require_valid(const AreaGeometry& g, const char* role) {
    std::string reason;
    if (!is_valid(g, reason)) {
        throw Error(ErrorKind::invalid_geometry,
                    std::string(role) + " geometry is invalid: " + reason);
    }
}

AreaGeometry from_boost_cleaned(const BMultiPolygon& mp) {
    return detail::from_boost(detail::normalized(mp));
}

}  // namespace

double area(const AreaGeometry& g) {
    require_valid(g, "input");
    return bg::area(detail::to_boost(g));
}

double length(const Polyline& line) noexcept {
    double total = 0.0;
    const auto& pts = line.vertices();
    for (std::size_t i = 1; i < pts.size(); ++i) {
        total += std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
    }
    return total;
}

AreaGeometry buffer_polyline(const Polyline& line, double total_width_m) {
    if (!(total_width_m > 0.0)) {
        throw Error(ErrorKind::invalid_parameter, "buffer width must be > 0");
    }
    const double half = total_width_m / 2.0;
    bg::strategy::buffer::distance_symmetric<double> distance(half);
    bg::strategy::buffer::side_straight side;
    bg::strategy::buffer::join_miter join(miter_limit);
    bg::strategy::buffer::end_flat end;
    bg::strategy::buffer::point_square point;

    BMultiPolygon out;
    bg::buffer(detail::to_boost(line), out, distance, side, join, end, point);
    return from_boost_cleaned(std::move(out));
}

AreaGeometry union_all(std::span<const AreaGeometry> geometries) {
    std::vector<BMultiPolygon> level;
    level.reserve(geometries.size());
    for (const AreaGeometry& g : geometries) {
        require_valid(g, "union input");
        level.push_back(detail::to_boost(g));
    }
    if (level.empty()) return {};
    // Balanced pairwise merge keeps intermediate results small.
    while (level.size() > 1) {
        std::vector<BMultiPolygon> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
            BMultiPolygon merged;
            bg::union_(level[i], level[i + 1], merged);
            next.push_back(std::move(merged));
        }
        if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
        level = std::move(next);
    }
    return from_boost_cleaned(std::move(level.front()));
}

AreaGeometry boolean_op(const AreaGeometry& a, const AreaGeometry& b, BooleanMode mode) {
    require_valid(a, "first");
    require_valid(b, "second");
    const BMultiPolygon ba = detail::to_boost(a);
    const BMultiPolygon bb = detail::to_boost(b);
    BMultiPolygon out;
    switch (mode) {
        case BooleanMode::difference:
            bg::difference(ba, bb, out);
            break;
        case BooleanMode::intersection:
            bg::intersection(ba, bb, out);
            break;
    }
    return from_boost_cleaned(std::move(out));
}

Polyline substring_along(const Polyline& line, double m_start, double m_end) {
    const double total = length(line);
    const double slack = 1e-9 * std::max(total, 1.0);
    if (!(m_start >= -slack) || !(m_end <= total + slack) || !(m_start < m_end)) {
        throw Error(ErrorKind::out_of_range,
                    "substring range [" + std::to_string(m_start) + ", " + std::to_string(m_end) +
                        "] outside [0, " + std::to_string(total) + "]");
    }
    const double lo = std::max(m_start, 0.0);
    const double hi = std::min(m_end, total);

    const auto& pts = line.vertices();
    std::vector<Point> piece;
    double walked = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const Point& a = pts[i - 1];
        const Point& b = pts[i];
        const double seg = std::hypot(b.x - a.x, b.y - a.y);
        const double seg_lo = walked;
        const double seg_hi = walked + seg;
        auto at = [&](double m) -> Point {
            const double t = (m - seg_lo) / seg;
            return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        };
        if (piece.empty() && lo <= seg_hi) {
            piece.push_back(at(std::max(lo, seg_lo)));
        }
        if (!piece.empty()) {
            if (hi <= seg_hi) {
                piece.push_back(at(hi));
                break;
            }
            piece.push_back(b);
        }
        walked = seg_hi;
    }
    return Polyline(std::move(piece));
}

bool is_valid(const AreaGeometry& g) {
    std::string reason;
    return is_valid(g, reason);
}

bool is_valid(const AreaGeometry& g, std::string& reason) {
    if (g.empty()) {
        reason.clear();
        return true;
    }
    auto all_finite = [](const Ring& ring) {
        for (const Point& p : ring) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
        }
        return true;
    };
    for (const PolygonWithHoles& poly : g.polygons) {
        bool finite = all_finite(poly.outer);
        for (const Ring& inner : poly.inners) finite = finite && all_finite(inner);
        if (!finite) {
            reason = "non-finite coordinate";
            return false;
        }
    }
    bg::validity_failure_type failure{};
    if (!bg::is_valid(detail::to_boost(g), failure)) {
        reason = bg::validity_failure_type_message(failure);
        return false;
    }
    reason.clear();
    return true;
}

bool intersects(const Polyline& line, const AreaGeometry& g) {
    if (g.empty()) return false;
    return bg::intersects(detail::to_boost(line), detail::to_boost(g));
}

}  // namespace voirie::geom
