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

#include "src/io/geojson.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <utility>
#include <vector>

#include "voirie/error.hpp"

namespace voirie::io::detail {

namespace {

json ring_to_json(const geom::Ring& ring) {
    json coords = json::array();
    for (const geom::Point& p : ring) coords.push_back(json::array({p.x, p.y}));
    return coords;
}

json polygon_coords(const geom::PolygonWithHoles& poly) {
    json rings = json::array();
    rings.push_back(ring_to_json(poly.outer));
    for (const geom::Ring& inner : poly.inners) rings.push_back(ring_to_json(inner));
    return rings;
}

geom::Point point_from_coord(const json& coord, const std::string& where) {
    if (!coord.is_array() || coord.size() < 2 || !coord[0].is_number() || !coord[1].is_number()) {
        throw Error(ErrorKind::schema, where + ": coordinate is not a [x, y] number pair");
    }
    return {coord[0].get<double>(), coord[1].get<double>()};
}

geom::Ring ring_from_json(const json& coords, const std::string& where) {
    if (!coords.is_array() || coords.size() < 3) {
        throw Error(ErrorKind::schema, where + ": ring needs at least 3 coordinates");
    }
    geom::Ring ring;
    ring.reserve(coords.size() + 1);
    for (const json& c : coords) ring.push_back(point_from_coord(c, where));
    // GeoJSON rings are closed; tolerate unclosed input.
    if (ring.front() != ring.back()) ring.push_back(ring.front());
    return ring;
}

geom::PolygonWithHoles polygon_from_coords(const json& coords, const std::string& where) {
    if (!coords.is_array() || coords.empty()) {
        throw Error(ErrorKind::schema, where + ": polygon has no rings");
    }
    geom::PolygonWithHoles poly;
    poly.outer = ring_from_json(coords[0], where);
    for (std::size_t i = 1; i < coords.size(); ++i) {
        poly.inners.push_back(ring_from_json(coords[i], where));
    }
    return poly;
}

}  // namespace

json point_to_json(const geom::Point& p) {
    return {{"type", "Point"}, {"coordinates", json::array({p.x, p.y})}};
}

json polyline_to_json(const geom::Polyline& line) {
    json coords = json::array();
    for (const geom::Point& p : line.vertices()) coords.push_back(json::array({p.x, p.y}));
    return {{"type", "LineString"}, {"coordinates", std::move(coords)}};
}

json area_to_json(const geom::AreaGeometry& g) {
    if (g.polygons.size() == 1) {
        return {{"type", "Polygon"}, {"coordinates", polygon_coords(g.polygons.front())}};
    }
    json polys = json::array();
    for (const geom::PolygonWithHoles& poly : g.polygons) polys.push_back(polygon_coords(poly));
    return {{"type", "MultiPolygon"}, {"coordinates", std::move(polys)}};
}

geom::Polyline polyline_from_json(const json& geometry, const std::string& where) {
    if (!geometry.is_object() || geometry.value("type", "") != "LineString") {
        throw Error(ErrorKind::schema, where + ": expected a LineString geometry");
    }
    const json& coords = geometry.at("coordinates");
    if (!coords.is_array() || coords.size() < 2) {
        throw Error(ErrorKind::schema, where + ": LineString needs at least 2 coordinates");
    }
    std::vector<geom::Point> pts;
    pts.reserve(coords.size());
    for (const json& c : coords) pts.push_back(point_from_coord(c, where));
    try {
        return geom::Polyline(std::move(pts));
    } catch (const Error& e) {
        throw Error(ErrorKind::schema, where + ": " + e.what());
    }
}

geom::AreaGeometry area_from_json(const json& geometry, const std::string& where) {
    if (!geometry.is_object()) {
        throw Error(ErrorKind::schema, where + ": geometry is not an object");
    }
    const std::string type = geometry.value("type", "");
    geom::AreaGeometry out;
    if (type == "Polygon") {
        out.polygons.push_back(polygon_from_coords(geometry.at("coordinates"), where));
    } else if (type == "MultiPolygon") {
        for (const json& coords : geometry.at("coordinates")) {
            out.polygons.push_back(polygon_from_coords(coords, where));
        }
    } else {
        throw Error(ErrorKind::schema, where + ": expected a Polygon or MultiPolygon geometry");
    }
    return out;
}

json feature(json geometry, json properties) {
    return {{"type", "Feature"}, {"geometry", std::move(geometry)}, {"properties", std::move(properties)}};
}

json feature_collection(json features) {
    return {{"type", "FeatureCollection"},
            {"crs_note", default_crs_note},
            {"features", std::move(features)}};
}

json load_feature_collection(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::io, "cannot open " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::schema, path.string() + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object() || doc.value("type", "") != "FeatureCollection" ||
        !doc.contains("features") || !doc["features"].is_array()) {
        throw Error(ErrorKind::schema, path.string() + ": not a GeoJSON FeatureCollection");
    }
    return doc;
}

void write_json_file(const json& doc, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::io, "cannot write " + path.string());
    }
    out << doc.dump(2) << "\n";
    if (!out) {
        throw Error(ErrorKind::io, "write failed for " + path.string());
    }
}

bool looks_geographic(const json& features) {
    bool saw_coordinate = false;
    // Walks every coordinate pair; any value outside lon/lat bounds clears
    // the suspicion.
    std::function<bool(const json&)> walk = [&](const json& node) -> bool {
        if (node.is_array()) {
            if (node.size() >= 2 && node[0].is_number() && node[1].is_number() &&
                (node.size() == 2 || !node[2].is_array())) {
                saw_coordinate = true;
                return std::abs(node[0].get<double>()) <= 180.0 &&
                       std::abs(node[1].get<double>()) <= 90.0;
            }
            for (const json& child : node) {
                if (!walk(child)) return false;
            }
        }
        return true;
    };
    for (const json& f : features) {
        if (!f.is_object() || !f.contains("geometry")) continue;
        const json& geometry = f["geometry"];
        if (geometry.is_object() && geometry.contains("coordinates")) {
            if (!walk(geometry["coordinates"])) return false;
        }
    }
    return saw_coordinate;
}

}  // namespace voirie::io::detail
