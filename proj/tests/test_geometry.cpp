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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "support/checks.hpp"
#include "support/fixtures.hpp"
#include "support/raster_oracle.hpp"
#include "voirie/geometry/ops.hpp"

using namespace voirie;
using geom::AreaGeometry;
using geom::BooleanMode;
using geom::Point;
using geom::Polyline;
using geom::Ring;
using testsupport::box;
using testsupport::near_rel;
using testsupport::raster_area;

namespace {

AreaGeometry grid4_strip_union(double width) {
    const auto grid = testsupport::make_grid4();
    std::vector<AreaGeometry> strips;
    for (const auto& axis : grid.axes) {
        strips.push_back(geom::buffer_polyline(axis.geometry, width));
    }
    return geom::union_all(strips);
}

}  // namespace

TEST_CASE("area of boxes") {
    CHECK(geom::area(box(0, 0, 1, 1)) == doctest::Approx(1.0));
    CHECK(geom::area(box(0, 0, 380, 380)) == doctest::Approx(144400.0));

    AreaGeometry with_hole = box(0, 0, 380, 380);
    // 80 x 80 hole, clockwise.
    with_hole.polygons[0].inners.push_back(
        Ring{{100, 100}, {100, 180}, {180, 180}, {180, 100}, {100, 100}});
    CHECK(geom::area(with_hole) == doctest::Approx(138000.0));
    CHECK(near_rel(raster_area(with_hole), 138000.0, 0.005));

    CHECK(geom::area(AreaGeometry{}) == 0.0);
}

TEST_CASE("area rejects invalid geometry") {
    AreaGeometry bowtie;
    bowtie.polygons.push_back({Ring{{0, 0}, {40, 40}, {40, 0}, {0, 40}, {0, 0}}, {}});
    CHECK_THROWS_KIND(geom::area(bowtie), ErrorKind::invalid_geometry);
}

TEST_CASE("polyline length") {
    CHECK(geom::length(Polyline({{0, 0}, {380, 0}})) == doctest::Approx(380.0));
    CHECK(geom::length(Polyline({{0, 0}, {3, 4}})) == doctest::Approx(5.0));
    CHECK(geom::length(Polyline({{0, 0}, {10, 0}, {10, 10}})) == doctest::Approx(20.0));
}

TEST_CASE("polyline invariants") {
    CHECK_THROWS_KIND(Polyline({{1, 1}}), ErrorKind::invalid_shape);
    CHECK_THROWS_KIND(Polyline({}), ErrorKind::invalid_shape);
    // Coincident vertices collapse; a degenerate path is rejected.
    CHECK_THROWS_KIND(Polyline({{1, 1}, {1, 1 + 1e-6}}), ErrorKind::invalid_shape);
    const Polyline cleaned({{0, 0}, {0, 0}, {5, 0}, {5, 0 + 1e-9}, {5, 5}});
    CHECK(cleaned.vertices().size() == 3);
    CHECK_THROWS_KIND(Polyline({{0, 0}, {std::nan(""), 1}}), ErrorKind::invalid_shape);
}

TEST_CASE("buffer of a straight segment is exactly L x w") {
    const auto wide = geom::buffer_polyline(Polyline({{0, 0}, {380, 0}}), 12.0);
    CHECK(near_rel(geom::area(wide), 4560.0, 1e-6));
    CHECK(near_rel(raster_area(wide), 4560.0, 0.005));

    const auto narrow = geom::buffer_polyline(Polyline({{0, 0}, {380, 0}}), 7.0);
    CHECK(near_rel(geom::area(narrow), 2660.0, 1e-6));
    CHECK(near_rel(raster_area(narrow), 2660.0, 0.005));
}

TEST_CASE("buffer rejects non-positive widths") {
    CHECK_THROWS_KIND(geom::buffer_polyline(Polyline({{0, 0}, {1, 0}}), 0.0),
                      ErrorKind::invalid_parameter);
    CHECK_THROWS_KIND(geom::buffer_polyline(Polyline({{0, 0}, {1, 0}}), -3.0),
                      ErrorKind::invalid_parameter);
}

TEST_CASE("flat-cap property on random straight segments") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coord(-500.0, 500.0);
    std::uniform_real_distribution<double> width(0.5, 30.0);
    for (int i = 0; i < 200; ++i) {
        const Point a{coord(rng), coord(rng)};
        const Point b{coord(rng), coord(rng)};
        if (std::hypot(b.x - a.x, b.y - a.y) < 1.0) continue;
        const double w = width(rng);
        const double expected = geom::length(Polyline({a, b})) * w;
        const double got = geom::area(geom::buffer_polyline(Polyline({a, b}), w));
        CHECK_MESSAGE(near_rel(got, expected, 1e-6), got << " vs " << expected);
    }
}

TEST_CASE("buffer across a right-angle corner keeps L x w (miter add == inner loss)") {
    const auto bent = geom::buffer_polyline(Polyline({{0, 0}, {10, 0}, {10, 10}}), 7.0);
    CHECK(near_rel(geom::area(bent), 140.0, 1e-6));
    CHECK(near_rel(raster_area(bent, 0.01), 140.0, 0.005));
}

TEST_CASE("union_all basics") {
    const std::vector<AreaGeometry> disjoint{box(0, 0, 1, 1), box(5, 5, 6, 6)};
    CHECK(geom::area(geom::union_all(disjoint)) == doctest::Approx(2.0));

    const std::vector<AreaGeometry> twice{box(0, 0, 9, 9), box(0, 0, 9, 9)};
    CHECK(geom::area(geom::union_all(twice)) == doctest::Approx(81.0));

    CHECK(geom::union_all({}).empty());
}

TEST_CASE("union of GRID4 strips matches inclusion-exclusion") {
    const auto merged = grid4_strip_union(7.0);
    // 10 strips of 380 x 7 crossing in 25 nodes of 7 x 7.
    CHECK(near_rel(geom::area(merged), 25375.0, 1e-6));
    CHECK(near_rel(raster_area(merged), 25375.0, 0.005));
}

TEST_CASE("boolean difference and intersection") {
    const auto grid = testsupport::make_grid4();
    std::vector<AreaGeometry> parcels;
    for (const auto& p : grid.parcels) parcels.push_back(p.geometry);
    const auto blocks = geom::union_all(parcels);
    const auto streets =
        geom::boolean_op(grid.boundary.geometry, blocks, BooleanMode::difference);
    CHECK(near_rel(geom::area(streets), 42000.0, 1e-6));
    CHECK(near_rel(raster_area(streets), 42000.0, 0.005));

    const auto self = box(3, 3, 11, 11);
    CHECK(geom::area(geom::boolean_op(self, self, BooleanMode::intersection)) ==
          doctest::Approx(64.0));

    const auto empty =
        geom::boolean_op(box(0, 0, 1, 1), box(5, 5, 6, 6), BooleanMode::intersection);
    CHECK(empty.empty());
    CHECK(geom::area(empty) == 0.0);
}

TEST_CASE("set conservation identities on random rectangle pairs") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(0.0, 100.0);
    std::uniform_real_distribution<double> size(1.0, 60.0);
    for (int i = 0; i < 500; ++i) {
        const double ax = coord(rng), ay = coord(rng);
        const double bx = coord(rng), by = coord(rng);
        const auto a = box(ax, ay, ax + size(rng), ay + size(rng));
        const auto b = box(bx, by, bx + size(rng), by + size(rng));
        const double area_a = geom::area(a);
        const double area_b = geom::area(b);
        const double inter = geom::area(geom::boolean_op(a, b, BooleanMode::intersection));
        const double a_minus_b = geom::area(geom::boolean_op(a, b, BooleanMode::difference));
        const double b_minus_a = geom::area(geom::boolean_op(b, a, BooleanMode::difference));
        const std::vector<AreaGeometry> both{a, b};
        const double union_area = geom::area(geom::union_all(both));

        CHECK(near_rel(inter + a_minus_b, area_a, 1e-6));
        CHECK(near_rel(inter + b_minus_a, area_b, 1e-6));
        CHECK(near_rel(union_area + inter, area_a + area_b, 1e-6));
    }
}

TEST_CASE("substring_along straight line") {
    const Polyline line({{0, 0}, {380, 0}});
    const auto head = geom::substring_along(line, 0.0, 10.0);
    CHECK(near_rel(geom::length(head), 10.0, 1e-6));
    CHECK(head.vertices().front() == Point{0, 0});

    const auto tail = geom::substring_along(line, 370.0, 380.0);
    CHECK(near_rel(geom::length(tail), 10.0, 1e-6));
    CHECK(tail.vertices().back() == Point{380, 0});
}

TEST_CASE("substring_along spans corners") {
    // Arc-length walk: on the 20 m L-shape, [5, 15] passes the corner at 10.
    const Polyline lshape({{0, 0}, {10, 0}, {10, 10}});
    const auto piece = geom::substring_along(lshape, 5.0, 15.0);
    CHECK(near_rel(geom::length(piece), 10.0, 1e-6));
    REQUIRE(piece.vertices().size() == 3);
    CHECK(piece.vertices()[0] == Point{5, 0});
    CHECK(piece.vertices()[1] == Point{10, 0});
    CHECK(piece.vertices()[2] == Point{10, 5});
}

TEST_CASE("substring_along range errors") {
    const Polyline line({{0, 0}, {380, 0}});
    CHECK_THROWS_KIND(geom::substring_along(line, -1.0, 5.0), ErrorKind::out_of_range);
    CHECK_THROWS_KIND(geom::substring_along(line, 0.0, 381.0), ErrorKind::out_of_range);
    CHECK_THROWS_KIND(geom::substring_along(line, 5.0, 5.0), ErrorKind::out_of_range);
    CHECK_THROWS_KIND(geom::substring_along(line, 7.0, 3.0), ErrorKind::out_of_range);
}

TEST_CASE("substring pieces concatenate to the full length") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> coord(-100.0, 100.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Point> pts;
        const int n = 2 + static_cast<int>(rng() % 6);
        for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
        Polyline line(pts);
        const double total = geom::length(line);
        const double step = total / 7.3;
        double sum = 0.0;
        for (double m = 0.0; m < total; m += step) {
            const double end = std::min(m + step, total);
            if (end - m < 1e-9) break;
            sum += geom::length(geom::substring_along(line, m, end));
        }
        CHECK(near_rel(sum, total, 1e-6));
    }
}

TEST_CASE("make_valid keeps already-valid geometry identical") {
    const auto square = box(2, 2, 12, 12);
    const auto repaired = geom::make_valid(square);
    REQUIRE(repaired.polygons.size() == 1);
    CHECK(repaired.polygons[0].outer == square.polygons[0].outer);
    CHECK(geom::area(repaired) == doctest::Approx(100.0));
}

TEST_CASE("make_valid splits a bow-tie into two triangles, area preserved") {
    AreaGeometry bowtie;
    bowtie.polygons.push_back({Ring{{0, 0}, {40, 40}, {40, 0}, {0, 40}, {0, 0}}, {}});
    const auto repaired = geom::make_valid(bowtie);
    CHECK(repaired.polygons.size() == 2);
    CHECK(geom::is_valid(repaired));
    CHECK(near_rel(geom::area(repaired), 800.0, 1e-6));
    // The oracle evaluates the dirty input directly under the even-odd rule.
    CHECK(near_rel(raster_area(bowtie), geom::area(repaired), 0.005));
}

TEST_CASE("make_valid failure modes") {
    CHECK_THROWS_KIND(geom::make_valid(AreaGeometry{}), ErrorKind::repair_failed);

    AreaGeometry degenerate;
    degenerate.polygons.push_back({Ring{{0, 0}, {5, 0}, {0, 0}}, {}});
    CHECK_THROWS_KIND(geom::make_valid(degenerate), ErrorKind::repair_failed);

    AreaGeometry collinear;
    collinear.polygons.push_back({Ring{{0, 0}, {5, 0}, {9, 0}, {0, 0}}, {}});
    CHECK_THROWS_KIND(geom::make_valid(collinear), ErrorKind::repair_failed);
}

TEST_CASE("make_valid repairs reversed orientation and unclosed rings") {
    AreaGeometry reversed;
    reversed.polygons.push_back({Ring{{0, 0}, {0, 9}, {9, 9}, {9, 0}}, {}});  // cw, open
    const auto repaired = geom::make_valid(reversed);
    CHECK(geom::is_valid(repaired));
    CHECK(geom::area(repaired) == doctest::Approx(81.0));
}

TEST_CASE("make_valid is the identity on valid random boxes") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> coord(-50.0, 50.0);
    for (int i = 0; i < 100; ++i) {
        const double x = coord(rng), y = coord(rng);
        const auto g = box(x, y, x + 1 + std::abs(coord(rng)), y + 1 + std::abs(coord(rng)));
        const auto repaired = geom::make_valid(g);
        CHECK(geom::area(repaired) == doctest::Approx(geom::area(g)));
    }
}

TEST_CASE("make_valid matches the even-odd raster oracle on random scribbles") {
    // Heavily self-intersecting rings; the oracle evaluates the raw ring.
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> coord(0.0, 60.0);
    int repaired = 0;
    for (int i = 0; i < 60; ++i) {
        Ring ring;
        const int n = 4 + static_cast<int>(rng() % 8);
        for (int k = 0; k < n; ++k) ring.push_back({coord(rng), coord(rng)});
        ring.push_back(ring.front());
        AreaGeometry dirty;
        dirty.polygons.push_back({ring, {}});
        if (geom::is_valid(dirty)) continue;
        const auto repaired_geom = geom::make_valid(dirty);
        ++repaired;
        CHECK(geom::is_valid(repaired_geom));
        const double expected = testsupport::raster_area_rings({ring}, 0.02);
        CHECK_MESSAGE(near_rel(geom::area(repaired_geom), expected, 0.01),
                      "case " << i << ": " << geom::area(repaired_geom) << " vs " << expected);
    }
    CHECK(repaired > 20);
}

TEST_CASE("polyline-region intersection") {
    const auto region = box(0, 0, 10, 10);
    CHECK(geom::intersects(Polyline({{-5, 5}, {15, 5}}), region));
    CHECK(geom::intersects(Polyline({{2, 2}, {3, 3}}), region));
    CHECK_FALSE(geom::intersects(Polyline({{20, 20}, {30, 30}}), region));
    CHECK_FALSE(geom::intersects(Polyline({{20, 20}, {30, 30}}), AreaGeometry{}));
}

TEST_CASE("raster oracle sanity: exact on grid-aligned boxes") {
    CHECK(raster_area(box(0, 0, 380, 380)) == doctest::Approx(144400.0));
    CHECK(raster_area(box(12, 12, 92, 92)) == doctest::Approx(6400.0));
}
