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

// Internal GeoJSON <-> geometry conversion shared by the loaders, the
// section table, and the exporters.  Coordinates are planar meters (the
// collection carries an informational `crs_note`); nothing here reprojects.

#ifndef VOIRIE_IO_GEOJSON_HPP
#define VOIRIE_IO_GEOJSON_HPP

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "voirie/geometry/types.hpp"

namespace voirie::io::detail {

using json = nlohmann::json;

inline constexpr const char* default_crs_note =
    "coordinates are planar meters in a projected CRS (not transformed by this tool)";

json point_to_json(const geom::Point& p);
json polyline_to_json(const geom::Polyline& line);
/// Emits "Polygon" for a single polygon, "MultiPolygon" otherwise.
json area_to_json(const geom::AreaGeometry& g);

/// @throws Error{schema} on malformed coordinates; `where` names the
///         offending feature in messages.
geom::Polyline polyline_from_json(const json& geometry, const std::string& where);
geom::AreaGeometry area_from_json(const json& geometry, const std::string& where);

json feature(json geometry, json properties);
json feature_collection(json features);

/// Reads and parses a file; schema error unless the root is a
/// FeatureCollection with a `features` array.
json load_feature_collection(const std::filesystem::path& path);

void write_json_file(const json& doc, const std::filesystem::path& path);

/// Heuristic CRS guard: true when every coordinate could be a lon/lat pair.
bool looks_geographic(const json& features);

}  // namespace voirie::io::detail

#endif  // VOIRIE_IO_GEOJSON_HPP
