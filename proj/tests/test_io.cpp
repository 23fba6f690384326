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
#include <fstream>
#include <string>

#include "doctest.h"
#include "support/checks.hpp"
#include "support/fixtures.hpp"
#include "support/raster_oracle.hpp"
#include "voirie/geometry/ops.hpp"
#include "voirie/io/loaders.hpp"
#include "voirie/report/report.hpp"

using namespace voirie;
using testsupport::near_rel;
using testsupport::TempDir;

namespace {

std::filesystem::path write(const TempDir& dir, const std::string& name,
                            const std::string& content) {
    const auto path = dir.file(name);
    std::ofstream out(path);
    out << content;
    return path;
}

// GRID4 written through the exporters; loaders must read their own output.
struct Grid4Files {
    TempDir dir;
    std::filesystem::path axes, parcels, boundary, widths;

    Grid4Files() {
        const auto grid = testsupport::make_grid4();
        axes = dir.file("axes.geojson");
        parcels = dir.file("parcels.geojson");
        boundary = dir.file("boundary.geojson");
        report::export_axes(grid.axes, axes);
        report::export_parcels(grid.parcels, parcels);
        report::export_boundary(grid.boundary, boundary);
        widths = write(dir, "widths.json", R"({"voie_auto": 7.0, "fallback_width": 3.5})");
    }
};

}  // namespace

TEST_CASE("load_axes reads the GRID4 axes") {
    Grid4Files files;
    const auto axes = io::load_axes(files.axes);
    REQUIRE(axes.size() == 10);
    CHECK(axes[0].id == "V0");
    CHECK(axes[9].id == "H4");
    CHECK(axes[3].category == "voie_auto");
    CHECK(geom::length(axes[0].geometry) == doctest::Approx(380.0));
    CHECK_FALSE(axes[0].measured_width_m.has_value());

    // Deterministic: a second load yields the same order.
    const auto again = io::load_axes(files.axes);
    for (std::size_t i = 0; i < axes.size(); ++i) CHECK(axes[i].id == again[i].id);
}

TEST_CASE("load_axes edge cases") {
    TempDir dir;
    const auto empty = write(dir, "empty.geojson",
                             R"({"type":"FeatureCollection","features":[]})");
    CHECK(io::load_axes(empty).empty());

    const auto duplicate = write(dir, "dup.geojson", R"({
      "type":"FeatureCollection","features":[
        {"type":"Feature","properties":{"id":"A1","category":"voie_auto"},
         "geometry":{"type":"LineString","coordinates":[[0,0],[200,0]]}},
        {"type":"Feature","properties":{"id":"A1","category":"voie_auto"},
         "geometry":{"type":"LineString","coordinates":[[0,100],[200,100]]}}]})");
    CHECK_THROWS_KIND(io::load_axes(duplicate), ErrorKind::duplicate_id);

    const auto missing_id = write(dir, "noid.geojson", R"({
      "type":"FeatureCollection","features":[
        {"type":"Feature","properties":{"category":"voie_auto"},
         "geometry":{"type":"LineString","coordinates":[[0,0],[200,0]]}}]})");
    try {
        io::load_axes(missing_id);
        FAIL("expected schema error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::schema);
        CHECK(std::string(e.what()).find("features[0]") != std::string::npos);
    }

    const auto missing_category = write(dir, "nocat.geojson", R"({
      "type":"FeatureCollection","features":[
        {"type":"Feature","properties":{"id":"A1"},
         "geometry":{"type":"LineString","coordinates":[[0,0],[200,0]]}}]})");
    CHECK_THROWS_KIND(io::load_axes(missing_category), ErrorKind::schema);

    const auto geographic = write(dir, "geo.geojson", R"({
      "type":"FeatureCollection","features":[
        {"type":"Feature","properties":{"id":"A1","category":"voie_auto"},
         "geometry":{"type":"LineString","coordinates":[[2.35,48.85],[2.36,48.86]]}}]})");
    CHECK_THROWS_KIND(io::load_axes(geographic), ErrorKind::crs);

    const auto bad_width = write(dir, "badw.geojson", R"({
      "type":"FeatureCollection","features":[
        {"type":"Feature","properties":{"id":"A1","category":"voie_auto","measured_width":-2},
         "geometry":{"type":"LineString","coordinates":[[0,0],[200,0]]}}]})");
    CHECK_THROWS_KIND(io::load_axes(bad_width), ErrorKind::schema);

    const auto not_a_line = write(dir, "poly.geojson", R"({
      "type":"FeatureCollection","features":[
        {"type":"Feature","properties":{"id":"A1","category":"voie_auto"},
         "geometry":{"type":"Polygon","coordinates":[[[0,0],[200,0],[200,200],[0,0]]]}}]})");
    CHECK_THROWS_KIND(io::load_axes(not_a_line), ErrorKind::schema);

    CHECK_THROWS_KIND(io::load_axes(dir.file("missing.geojson")), ErrorKind::io);
}

TEST_CASE("load_parcels reads GRID4") {
    Grid4Files files;
    WarningLog warnings;
    const auto parcels = io::load_parcels(files.parcels, &warnings);
    REQUIRE(parcels.size() == 16);
    double total = 0.0;
    for (const auto& parcel : parcels) total += geom::area(parcel.geometry);
    CHECK(near_rel(total, 102400.0, 1e-9));
    CHECK(warnings.empty());
}

TEST_CASE("load_parcels repairs a bow-tie parcel with a warning") {
    TempDir dir;
    const auto bowtie = write(dir, "bowtie.geojson", R"({
      "type":"FeatureCollection","features":[
        {"type":"Feature","properties":{"id":"P1"},
         "geometry":{"type":"Polygon","coordinates":[[[200,200],[240,240],[240,200],[200,240],[200,200]]]}}]})");
    WarningLog warnings;
    const auto parcels = io::load_parcels(bowtie, &warnings);
    REQUIRE(parcels.size() == 1);
    REQUIRE(warnings.messages().size() == 1);
    CHECK(warnings.messages()[0].find("P1") != std::string::npos);
    // Area preserved under the even-odd reading of the dirty ring.
    CHECK(near_rel(geom::area(parcels[0].geometry),
                   testsupport::raster_area(parcels[0].geometry), 0.005));
    CHECK(geom::area(parcels[0].geometry) == doctest::Approx(800.0));
}

TEST_CASE("load_parcels rejects zero-area parcels") {
    TempDir dir;
    const auto degenerate = write(dir, "flat.geojson", R"({
      "type":"FeatureCollection","features":[
        {"type":"Feature","properties":{"id":"P1"},
         "geometry":{"type":"Polygon","coordinates":[[[200,200],[300,200],[250,200],[200,200]]]}}]})");
    CHECK_THROWS_KIND(io::load_parcels(degenerate), ErrorKind::schema);
}

TEST_CASE("load_boundary") {
    Grid4Files files;
    const auto boundary = io::load_boundary(files.boundary);
    CHECK(boundary.label == "GRID4");
    CHECK(near_rel(geom::area(boundary.geometry), 144400.0, 1e-9));

    TempDir dir;
    const auto two = write(dir, "two.geojson", R"({
      "type":"FeatureCollection","features":[
        {"type":"Feature","properties":{"label":"a"},
         "geometry":{"type":"Polygon","coordinates":[[[0,0],[200,0],[200,200],[0,200],[0,0]]]}},
        {"type":"Feature","properties":{"label":"b"},
         "geometry":{"type":"Polygon","coordinates":[[[300,0],[500,0],[500,200],[300,200],[300,0]]]}}]})");
    CHECK_THROWS_KIND(io::load_boundary(two), ErrorKind::cardinality);

    const auto none = write(dir, "none.geojson",
                            R"({"type":"FeatureCollection","features":[]})");
    CHECK_THROWS_KIND(io::load_boundary(none), ErrorKind::cardinality);

    const auto line = write(dir, "line.geojson", R"({
      "type":"FeatureCollection","features":[
        {"type":"Feature","properties":{"label":"a"},
         "geometry":{"type":"LineString","coordinates":[[0,0],[200,0]]}}]})");
    CHECK_THROWS_KIND(io::load_boundary(line), ErrorKind::schema);
}

TEST_CASE("load_width_rules") {
    TempDir dir;
    const auto rules =
        io::load_width_rules(write(dir, "w.json", R"({"voie_auto": 7.0, "fallback_width": 3.5})"));
    CHECK(rules.width_by_category.size() == 1);
    CHECK(rules.width_by_category.at("voie_auto") == 7.0);
    CHECK(rules.fallback_width_m == 3.5);

    CHECK_THROWS_KIND(io::load_width_rules(
                          write(dir, "neg.json", R"({"voie_auto": -1, "fallback_width": 3.5})")),
                      ErrorKind::invalid_parameter);
    CHECK_THROWS_KIND(io::load_width_rules(write(dir, "empty.json", "{}")), ErrorKind::schema);
    CHECK_THROWS_KIND(io::load_width_rules(write(dir, "nofb.json", R"({"voie_auto": 7})")),
                      ErrorKind::schema);
}

TEST_CASE("width rules hash is stable and order-independent") {
    io::WidthRules a;
    a.width_by_category = {{"voie_auto", 7.0}, {"voie_cycles", 2.0}};
    a.fallback_width_m = 3.5;
    io::WidthRules b;
    b.width_by_category = {{"voie_cycles", 2.0}, {"voie_auto", 7.0}};
    b.fallback_width_m = 3.5;
    CHECK(a.content_hash() == b.content_hash());

    b.fallback_width_m = 4.0;
    CHECK(a.content_hash() != b.content_hash());
}

TEST_CASE("export / load round trip preserves ids, categories, and areas") {
    const auto grid = testsupport::make_grid4();
    TempDir dir;

    report::export_axes(grid.axes, dir.file("axes.geojson"));
    const auto axes = io::load_axes(dir.file("axes.geojson"));
    REQUIRE(axes.size() == grid.axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) {
        CHECK(axes[i].id == grid.axes[i].id);
        CHECK(axes[i].category == grid.axes[i].category);
        CHECK(near_rel(geom::length(axes[i].geometry), geom::length(grid.axes[i].geometry), 1e-9));
    }

    report::export_parcels(grid.parcels, dir.file("parcels.geojson"));
    const auto parcels = io::load_parcels(dir.file("parcels.geojson"));
    REQUIRE(parcels.size() == grid.parcels.size());
    for (std::size_t i = 0; i < parcels.size(); ++i) {
        CHECK(parcels[i].id == grid.parcels[i].id);
        CHECK(near_rel(geom::area(parcels[i].geometry), geom::area(grid.parcels[i].geometry),
                       1e-9));
    }

    report::export_boundary(grid.boundary, dir.file("boundary.geojson"));
    const auto boundary = io::load_boundary(dir.file("boundary.geojson"));
    CHECK(boundary.label == grid.boundary.label);
    CHECK(near_rel(geom::area(boundary.geometry), geom::area(grid.boundary.geometry), 1e-9));
}
