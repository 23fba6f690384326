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

#ifndef VOIRIE_IO_LOADERS_HPP
#define VOIRIE_IO_LOADERS_HPP

/// @file loaders.hpp
/// Loading and validation of the spatial inputs (road axes, cadastral
/// parcels, study boundary) and the width-rules configuration.
///
/// Input format: GeoJSON feature collections whose coordinates are planar
/// meters in a projected CRS (informational `crs_note` member at collection
/// level).  The loaders never reproject; a heuristic rejects coordinates
/// that all look like lon/lat pairs.
///
/// Invalid PARCEL geometry is auto-repaired with a warning (cadastral data
/// is routinely dirty).  Axes are never auto-repaired: buffering amplifies
/// axis errors, so bad axes fail fast.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voirie/error.hpp"
#include "voirie/geometry/types.hpp"

namespace voirie::io {

/// A centerline with the category used for width attribution.  Categories
/// are lexicon terms or machine codes ("voie_auto", "voie_cycles",
/// "voie_tc"); mapping from any national dataset is up to the user.
struct RoadAxis {
    std::string id;
    geom::Polyline geometry;
    std::string category;
    std::optional<double> measured_width_m;  ///< field survey, wins over rules
    std::optional<std::string> name;
};

struct CadastralParcel {
    std::string id;
    geom::AreaGeometry geometry;
};

struct StudyBoundary {
    geom::AreaGeometry geometry;  ///< exactly one polygon
    std::string label;            ///< e.g. commune name
};

/// Default carriageway width per category, with a catch-all fallback.
struct WidthRules {
    std::map<std::string, double> width_by_category;
    double fallback_width_m = 0.0;

    /// Stable fingerprint of the rule set, recorded in footprint params.
    [[nodiscard]] std::string content_hash() const;
};

/// @throws Error{schema} missing `id`/`category`, naming the feature index;
///         Error{duplicate_id}; Error{crs} when all coordinates look
///         geographic.
std::vector<RoadAxis> load_axes(const std::filesystem::path& path);

/// Polygon features with property `id`.  Invalid geometry is repaired via
/// make_valid with a warning; zero-area parcels are schema errors.
std::vector<CadastralParcel> load_parcels(const std::filesystem::path& path,
                                          WarningLog* warnings = nullptr);

/// @throws Error{cardinality} unless the file holds exactly one polygon
///         feature.
StudyBoundary load_boundary(const std::filesystem::path& path);

/// JSON object of category -> width plus required `fallback_width`.
/// @throws Error{invalid_parameter} on non-positive widths;
///         Error{schema} when `fallback_width` is missing.
WidthRules load_width_rules(const std::filesystem::path& path);

}  // namespace voirie::io

#endif  // VOIRIE_IO_LOADERS_HPP
