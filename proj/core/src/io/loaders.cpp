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

#include "voirie/io/loaders.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "src/io/geojson.hpp"
#include "voirie/geometry/ops.hpp"

namespace voirie::io {

namespace {

using detail::json;

std::string feature_label(const char* what, std::size_t index) {
    return std::string(what) + " features[" + std::to_string(index) + "]";
}

const json& properties_of(const json& feat, const std::string& where) {
    if (!feat.is_object() || feat.value("type", "") != "Feature" || !feat.contains("geometry")) {
        throw Error(ErrorKind::schema, where + ": not a GeoJSON Feature");
    }
    static const json empty_object = json::object();
    if (!feat.contains("properties") || feat["properties"].is_null()) return empty_object;
    if (!feat["properties"].is_object()) {
        throw Error(ErrorKind::schema, where + ": properties is not an object");
    }
    return feat["properties"];
}

std::string required_string(const json& props, const char* key, const std::string& where) {
    if (!props.contains(key) || !props[key].is_string() || props[key].get<std::string>().empty()) {
        throw Error(ErrorKind::schema, where + ": missing property '" + key + "'");
    }
    return props[key].get<std::string>();
}

void check_unique(std::set<std::string>& seen, const std::string& id, const std::string& where) {
    if (!seen.insert(id).second) {
        throw Error(ErrorKind::duplicate_id, where + ": duplicate id \"" + id + "\"");
    }
}

void check_crs(const json& features, const std::filesystem::path& path) {
    if (detail::looks_geographic(features)) {
        throw Error(ErrorKind::crs,
                    path.string() +
                        ": all coordinates look geographic (|x|<=180, |y|<=90); "
                        "coordinates must be planar meters in a projected CRS");
    }
}

// FNV-1a over a canonical serialization.
std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace

std::string WidthRules::content_hash() const {
    std::ostringstream canon;
    canon.precision(17);
    for (const auto& [category, width] : width_by_category) {
        canon << category << '=' << width << ';';
    }
    canon << "fallback=" << fallback_width_m;
    return fnv1a_hex(canon.str());
}

std::vector<RoadAxis> load_axes(const std::filesystem::path& path) {
    const json doc = detail::load_feature_collection(path);
    const json& features = doc["features"];
    if (!features.empty()) check_crs(features, path);

    std::vector<RoadAxis> axes;
    axes.reserve(features.size());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < features.size(); ++i) {
        const std::string where = feature_label("axis", i);
        const json& props = properties_of(features[i], where);
        const std::string id = required_string(props, "id", where);
        const std::string category = required_string(props, "category", where);
        check_unique(seen, id, where);

        std::optional<double> measured;
        if (props.contains("measured_width") && !props["measured_width"].is_null()) {
            if (!props["measured_width"].is_number()) {
                throw Error(ErrorKind::schema, where + ": measured_width is not a number");
            }
            measured = props["measured_width"].get<double>();
            if (!(*measured > 0.0)) {
                throw Error(ErrorKind::schema, where + ": measured_width must be > 0");
            }
        }
        std::optional<std::string> name;
        if (props.contains("name") && props["name"].is_string()) {
            name = props["name"].get<std::string>();
        }

        axes.push_back(RoadAxis{id, detail::polyline_from_json(features[i]["geometry"], where),
                                category, measured, name});
    }
    return axes;
}

std::vector<CadastralParcel> load_parcels(const std::filesystem::path& path,
                                          WarningLog* warnings) {
    const json doc = detail::load_feature_collection(path);
    const json& features = doc["features"];
    if (!features.empty()) check_crs(features, path);

    std::vector<CadastralParcel> parcels;
    parcels.reserve(features.size());
    std::set<std::string> seen;
    for (std::size_t i = 0; i < features.size(); ++i) {
        const std::string where = feature_label("parcel", i);
        const json& props = properties_of(features[i], where);
        const std::string id = required_string(props, "id", where);
        check_unique(seen, id, where);

        geom::AreaGeometry geometry = detail::area_from_json(features[i]["geometry"], where);
        if (!geom::is_valid(geometry)) {
            try {
                geometry = geom::make_valid(geometry);
            } catch (const Error& e) {
                throw Error(ErrorKind::schema,
                            where + " (id \"" + id + "\"): unrepairable geometry: " + e.what());
            }
            warn(warnings, where + " (id \"" + id + "\"): invalid geometry repaired");
        }
        if (!(geom::area(geometry) > 0.0)) {
            throw Error(ErrorKind::schema, where + " (id \"" + id + "\"): zero-area parcel");
        }
        parcels.push_back(CadastralParcel{id, std::move(geometry)});
    }
    return parcels;
}

StudyBoundary load_boundary(const std::filesystem::path& path) {
    const json doc = detail::load_feature_collection(path);
    const json& features = doc["features"];
    if (features.size() != 1) {
        throw Error(ErrorKind::cardinality, path.string() + ": boundary file must hold exactly 1 feature, got " +
                                                std::to_string(features.size()));
    }
    check_crs(features, path);

    const std::string where = feature_label("boundary", 0);
    const json& props = properties_of(features[0], where);
    geom::AreaGeometry geometry = detail::area_from_json(features[0]["geometry"], where);
    if (geometry.polygons.size() != 1) {
        throw Error(ErrorKind::cardinality,
                    where + ": boundary must be a single polygon, got " +
                        std::to_string(geometry.polygons.size()));
    }
    std::string reason;
    if (!geom::is_valid(geometry, reason)) {
        throw Error(ErrorKind::schema, where + ": invalid boundary geometry: " + reason);
    }
    if (!(geom::area(geometry) > 0.0)) {
        throw Error(ErrorKind::schema, where + ": boundary has zero area");
    }
    std::string label;
    if (props.contains("label") && props["label"].is_string()) {
        label = props["label"].get<std::string>();
    } else if (props.contains("name") && props["name"].is_string()) {
        label = props["name"].get<std::string>();
    }
    return StudyBoundary{std::move(geometry), std::move(label)};
}

WidthRules load_width_rules(const std::filesystem::path& path) {
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
    if (!doc.is_object()) {
        throw Error(ErrorKind::schema, path.string() + ": width rules must be a JSON object");
    }

    WidthRules rules;
    bool have_fallback = false;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_number()) {
            throw Error(ErrorKind::schema, path.string() + ": width for \"" + key + "\" is not a number");
        }
        const double width = value.get<double>();
        if (!(width > 0.0)) {
            throw Error(ErrorKind::invalid_parameter,
                        path.string() + ": width for \"" + key + "\" must be > 0");
        }
        if (key == "fallback_width") {
            rules.fallback_width_m = width;
            have_fallback = true;
        } else {
            rules.width_by_category[key] = width;
        }
    }
    if (!have_fallback) {
        throw Error(ErrorKind::schema, path.string() + ": missing \"fallback_width\"");
    }
    return rules;
}

}  // namespace voirie::io
