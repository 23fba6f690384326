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
#include "doctest.h"
#include "support/checks.hpp"
#include "support/fixtures.hpp"
#include "support/raster_oracle.hpp"
#include "voirie/footprint/footprint.hpp"

using namespace voirie;
using footprint::FootprintSet;
using footprint::Label;
using footprint::Provenance;
using testsupport::box;
using testsupport::Grid4;
using testsupport::near_rel;

TEST_CASE("assign_width precedence: measured > category rule > fallback") {
    const auto grid = testsupport::make_grid4();

    io::RoadAxis by_rule{"A", geom::Polyline({{0, 0}, {10, 0}}), "voie_auto", {}, {}};
    CHECK(footprint::assign_width(by_rule, grid.rules_width7) == 7.0);

    io::RoadAxis measured{"B", geom::Polyline({{0, 0}, {10, 0}}), "voie_auto", 9.2, {}};
    CHECK(footprint::assign_width(measured, grid.rules_width7) == 9.2);

    io::RoadAxis unknown{"C", geom::Polyline({{0, 0}, {10, 0}}), "unknown_cat", {}, {}};
    CHECK(footprint::assign_width(unknown, grid.rules_width7) == 3.5);
}

TEST_CASE("centerline footprint on GRID4") {
    const auto grid = testsupport::make_grid4();
    const auto set =
        footprint::build_centerline_footprint(grid.axes, grid.rules_width7, grid.boundary);
    CHECK(set.label == Label::carriageway);
    CHECK(set.provenance == Provenance::centerline);
    CHECK(set.params.boundary_label == "GRID4");
    CHECK(near_rel(set.area_m2, Grid4::carriageway7_m2, 1e-3));
    CHECK(near_rel(set.area_m2, geom::area(set.geometry), 1e-9));
    CHECK(near_rel(testsupport::raster_area(set.geometry), Grid4::carriageway7_m2, 0.005));

    // Width 12 fills the street grid exactly.
    const auto full =
        footprint::build_centerline_footprint(grid.axes, grid.rules_width12, grid.boundary);
    CHECK(near_rel(full.area_m2, Grid4::public_space_m2, 1e-3));

    const auto none =
        footprint::build_centerline_footprint({}, grid.rules_width7, grid.boundary);
    CHECK(none.area_m2 == 0.0);
    CHECK(none.geometry.empty());
}

TEST_CASE("cadastral footprint on GRID4") {
    const auto grid = testsupport::make_grid4();
    WarningLog warnings;
    const auto set = footprint::build_cadastral_footprint(grid.parcels, grid.boundary, &warnings);
    CHECK(set.label == Label::public_space);
    CHECK(set.provenance == Provenance::cadastre);
    CHECK(near_rel(set.area_m2, Grid4::public_space_m2, 1e-3));
    CHECK(warnings.empty());

    const auto whole = footprint::build_cadastral_footprint({}, grid.boundary);
    CHECK(near_rel(whole.area_m2, Grid4::boundary_area_m2, 1e-9));

    // Parcels tiling the whole boundary leave nothing.
    std::vector<io::CadastralParcel> tiling{{"everything", box(0, 0, 380, 380)}};
    const auto nothing = footprint::build_cadastral_footprint(tiling, grid.boundary);
    CHECK(nothing.area_m2 == 0.0);
}

TEST_CASE("parcels outside the boundary are clipped with a warning") {
    const auto grid = testsupport::make_grid4();
    std::vector<io::CadastralParcel> parcels{{"inside", box(12, 12, 92, 92)},
                                             {"straddling", box(340, 340, 420, 420)}};
    WarningLog warnings;
    const auto set = footprint::build_cadastral_footprint(parcels, grid.boundary, &warnings);
    CHECK(warnings.messages().size() == 1);
    // 144 400 - 6 400 - 40 x 40 inside part.
    CHECK(near_rel(set.area_m2, 144400.0 - 6400.0 - 1600.0, 1e-6));
    // Clipping: footprint never leaks outside the boundary.
    const auto outside = geom::boolean_op(set.geometry, grid.boundary.geometry,
                                          geom::BooleanMode::difference);
    CHECK(geom::area(outside) <= 1e-6 * set.area_m2);
}

TEST_CASE("combination on GRID4 separates carriageway from dependencies") {
    const auto grid = testsupport::make_grid4();
    const auto a =
        footprint::build_centerline_footprint(grid.axes, grid.rules_width7, grid.boundary);
    const auto b = footprint::build_cadastral_footprint(grid.parcels, grid.boundary);
    const auto combined = footprint::combine_footprints(a, b);

    CHECK(combined.carriageway.label == Label::carriageway);
    CHECK(combined.dependency.label == Label::dependency);
    CHECK(combined.unexplained.label == Label::unexplained);
    CHECK(combined.carriageway.provenance == Provenance::combined);

    CHECK(near_rel(combined.carriageway.area_m2, Grid4::carriageway7_m2, 1e-3));
    CHECK(near_rel(combined.dependency.area_m2, Grid4::dependency7_m2, 1e-3));
    CHECK(combined.unexplained.area_m2 <= 1e-3 * Grid4::boundary_area_m2);

    // Partition of the public space.
    CHECK(near_rel(combined.carriageway.area_m2 + combined.dependency.area_m2, b.area_m2, 1e-6));

    // Width 12: the carriageway explains all of the public space.
    const auto full =
        footprint::build_centerline_footprint(grid.axes, grid.rules_width12, grid.boundary);
    const auto all_explained = footprint::combine_footprints(full, b);
    CHECK(all_explained.dependency.area_m2 <= 1e-6 * Grid4::boundary_area_m2);
    CHECK(all_explained.unexplained.area_m2 <= 1e-6 * Grid4::boundary_area_m2);
}

TEST_CASE("combining an empty carriageway yields dependency == public space") {
    const auto grid = testsupport::make_grid4();
    const auto empty =
        footprint::build_centerline_footprint({}, grid.rules_width7, grid.boundary);
    const auto b = footprint::build_cadastral_footprint(grid.parcels, grid.boundary);
    const auto combined = footprint::combine_footprints(empty, b);
    CHECK(near_rel(combined.dependency.area_m2, b.area_m2, 1e-9));
    CHECK(combined.carriageway.area_m2 == 0.0);
}

TEST_CASE("combine rejects mismatched inputs") {
    const auto grid = testsupport::make_grid4();
    const auto a =
        footprint::build_centerline_footprint(grid.axes, grid.rules_width7, grid.boundary);
    const auto b = footprint::build_cadastral_footprint(grid.parcels, grid.boundary);

    io::StudyBoundary other{box(0, 0, 380, 380), "ELSEWHERE"};
    const auto b_other = footprint::build_cadastral_footprint(grid.parcels, other);
    CHECK_THROWS_KIND(footprint::combine_footprints(a, b_other), ErrorKind::inconsistent_inputs);
    CHECK_THROWS_KIND(footprint::combine_footprints(b, a), ErrorKind::inconsistent_inputs);
}

TEST_CASE("comparison metrics on GRID4") {
    const auto grid = testsupport::make_grid4();
    const auto a =
        footprint::build_centerline_footprint(grid.axes, grid.rules_width7, grid.boundary);
    const auto b = footprint::build_cadastral_footprint(grid.parcels, grid.boundary);
    const auto metrics = footprint::compare_footprints(a, b);

    CHECK(near_rel(metrics.area_a_m2, 25375.0, 1e-3));
    CHECK(near_rel(metrics.area_b_m2, 42000.0, 1e-3));
    // a is inside b on this fixture.
    CHECK(near_rel(metrics.area_intersection_m2, 25375.0, 1e-3));
    CHECK(metrics.area_a_minus_b_m2 <= 1e-6 * metrics.area_a_m2);
    CHECK(metrics.iou == doctest::Approx(25375.0 / 42000.0).epsilon(1e-3));

    // Conservation identities.
    CHECK(near_rel(metrics.area_intersection_m2 + metrics.area_a_minus_b_m2, metrics.area_a_m2,
                   1e-6));
    CHECK(near_rel(metrics.area_intersection_m2 + metrics.area_b_minus_a_m2, metrics.area_b_m2,
                   1e-6));
}

TEST_CASE("comparison of identical and disjoint inputs") {
    const auto grid = testsupport::make_grid4();
    const auto b = footprint::build_cadastral_footprint(grid.parcels, grid.boundary);
    const auto same = footprint::compare_footprints(b, b);
    CHECK(same.iou == doctest::Approx(1.0).epsilon(1e-9));

    FootprintSet left;
    left.label = Label::carriageway;
    left.geometry = box(0, 0, 10, 10);
    left.area_m2 = geom::area(left.geometry);
    left.params.boundary_label = "X";
    FootprintSet right = left;
    right.geometry = box(100, 100, 110, 110);
    right.area_m2 = geom::area(right.geometry);
    const auto disjoint = footprint::compare_footprints(left, right);
    CHECK(disjoint.iou == 0.0);
    CHECK(disjoint.area_intersection_m2 == 0.0);
}

TEST_CASE("monotonicity: wider rules weakly grow the centerline footprint") {
    const auto grid = testsupport::make_grid4();
    const auto narrow =
        footprint::build_centerline_footprint(grid.axes, grid.rules_width7, grid.boundary);
    const auto wide =
        footprint::build_centerline_footprint(grid.axes, grid.rules_width12, grid.boundary);
    CHECK(narrow.area_m2 <= wide.area_m2 + 1e-9);
}

TEST_CASE("carriageway never exceeds public space when axes run inside streets") {
    const auto grid = testsupport::make_grid4();
    const auto a =
        footprint::build_centerline_footprint(grid.axes, grid.rules_width7, grid.boundary);
    const auto b = footprint::build_cadastral_footprint(grid.parcels, grid.boundary);
    CHECK(a.area_m2 <= b.area_m2 + 1e-9);
}

TEST_CASE("centerline footprint is clipped to the boundary") {
    const auto grid = testsupport::make_grid4();
    // An axis running past the boundary edge.
    std::vector<io::RoadAxis> axes{
        {"runaway", geom::Polyline({{-50.0, 6.0}, {450.0, 6.0}}), "voie_auto", {}, {}}};
    const auto set = footprint::build_centerline_footprint(axes, grid.rules_width7, grid.boundary);
    CHECK(near_rel(set.area_m2, 380.0 * 7.0, 1e-6));
    const auto leak =
        geom::boolean_op(set.geometry, grid.boundary.geometry, geom::BooleanMode::difference);
    CHECK(geom::area(leak) == 0.0);
}
