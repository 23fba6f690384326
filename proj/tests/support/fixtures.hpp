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

#ifndef VOIRIE_TESTS_FIXTURES_HPP
#define VOIRIE_TESTS_FIXTURES_HPP

// Shared fixtures.  GRID4 is the analytic street grid every derived value
// was computed from by hand:
//   - boundary square 380 x 380 m at the origin;
//   - 16 parcels of 80 x 80 m at offsets {12, 104, 196, 288}^2;
//   - 10 axes down the street centers: 5 vertical at x in
//     {6, 98, 190, 282, 374} and 5 horizontal at the same y values;
//   - streets are 12 m wide, the carriageway rule gives 7 m.
// Hence: boundary 144 400 m2, parcels 16 * 6 400 = 102 400 m2, public
// space 42 000 m2, carriageway at width 7 = 10*380*7 - 25*7^2 = 25 375 m2.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "voirie/geometry/types.hpp"
#include "voirie/io/loaders.hpp"

namespace testsupport {

inline voirie::geom::AreaGeometry box(double x0, double y0, double x1, double y1) {
    voirie::geom::AreaGeometry g;
    g.polygons.push_back(
        {voirie::geom::Ring{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}, {x0, y0}}, {}});
    return g;
}

struct Grid4 {
    voirie::io::StudyBoundary boundary;
    std::vector<voirie::io::CadastralParcel> parcels;
    std::vector<voirie::io::RoadAxis> axes;
    voirie::io::WidthRules rules_width7;
    voirie::io::WidthRules rules_width12;

    static constexpr double boundary_area_m2 = 380.0 * 380.0;           // 144 400
    static constexpr double parcel_area_m2 = 16.0 * 80.0 * 80.0;        // 102 400
    static constexpr double public_space_m2 = 42000.0;
    static constexpr double carriageway7_m2 = 25375.0;                  // 10*380*7 - 25*49
    static constexpr double dependency7_m2 = 16625.0;                   // 42 000 - 25 375
};

inline Grid4 make_grid4() {
    Grid4 grid;
    grid.boundary = voirie::io::StudyBoundary{box(0.0, 0.0, 380.0, 380.0), "GRID4"};

    const double offsets[] = {12.0, 104.0, 196.0, 288.0};
    int parcel_index = 0;
    for (double oy : offsets) {
        for (double ox : offsets) {
            grid.parcels.push_back(voirie::io::CadastralParcel{
                "P" + std::to_string(parcel_index++), box(ox, oy, ox + 80.0, oy + 80.0)});
        }
    }

    const double centers[] = {6.0, 98.0, 190.0, 282.0, 374.0};
    int axis_index = 0;
    for (double x : centers) {
        grid.axes.push_back(voirie::io::RoadAxis{
            "V" + std::to_string(axis_index++),
            voirie::geom::Polyline({{x, 0.0}, {x, 380.0}}), "voie_auto", {}, {}});
    }
    axis_index = 0;
    for (double y : centers) {
        grid.axes.push_back(voirie::io::RoadAxis{
            "H" + std::to_string(axis_index++),
            voirie::geom::Polyline({{0.0, y}, {380.0, y}}), "voie_auto", {}, {}});
    }

    grid.rules_width7.width_by_category["voie_auto"] = 7.0;
    grid.rules_width7.fallback_width_m = 3.5;
    grid.rules_width12.width_by_category["voie_auto"] = 12.0;
    grid.rules_width12.fallback_width_m = 3.5;
    return grid;
}

/// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::mt19937_64 rng{std::random_device{}()};
        path_ = std::filesystem::temp_directory_path() /
                ("voirie_test_" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }
    [[nodiscard]] std::filesystem::path file(const std::string& name) const {
        return path_ / name;
    }

private:
    std::filesystem::path path_;
};

}  // namespace testsupport

#endif  // VOIRIE_TESTS_FIXTURES_HPP
