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
#include <utility>

#include "src/io/geojson.hpp"
#include "voirie/geometry/ops.hpp"
#include "voirie/registry/registry.hpp"

namespace voirie::registry {

namespace {

using io::detail::json;

}  // namespace

std::vector<Section> build_sections(std::span<const io::RoadAxis> axes, double step_m) {
    if (!(step_m > 0.0)) {
        throw Error(ErrorKind::invalid_parameter, "section step must be > 0");
    }
    std::vector<Section> sections;
    for (const io::RoadAxis& axis : axes) {
        const double total = geom::length(axis.geometry);
        // Guard against a spurious hair-thin final section when the length
        // is a near-exact multiple of the step.
        const auto count = static_cast<std::size_t>(
            std::max(1.0, std::ceil(total / step_m - 1e-9)));
        sections.reserve(sections.size() + count);
        for (std::size_t i = 0; i < count; ++i) {
            const double m_start = static_cast<double>(i) * step_m;
            const double m_end = (i + 1 == count) ? total : m_start + step_m;
            sections.push_back(Section{axis.id + ":" + std::to_string(i), axis.id, m_start, m_end,
                                       geom::substring_along(axis.geometry, m_start, m_end)});
        }
    }
    return sections;
}

void save_sections(std::span<const Section> sections, const std::filesystem::path& path) {
    json features = json::array();
    for (const Section& section : sections) {
        features.push_back(io::detail::feature(io::detail::polyline_to_json(section.geometry),
                                               json{{"id", section.id},
                                                    {"axis_id", section.axis_id},
                                                    {"m_start", section.m_start},
                                                    {"m_end", section.m_end}}));
    }
    io::detail::write_json_file(io::detail::feature_collection(std::move(features)), path);
}

std::vector<Section> load_sections(const std::filesystem::path& path) {
    const json doc = io::detail::load_feature_collection(path);
    const json& features = doc["features"];
    std::vector<Section> sections;
    sections.reserve(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        const std::string where = path.string() + ": features[" + std::to_string(i) + "]";
        const json& feat = features[i];
        if (!feat.is_object() || !feat.contains("properties") || !feat["properties"].is_object()) {
            throw Error(ErrorKind::schema, where + ": missing properties");
        }
        const json& props = feat["properties"];
        for (const char* key : {"id", "axis_id", "m_start", "m_end"}) {
            if (!props.contains(key)) {
                throw Error(ErrorKind::schema, where + ": missing property '" + std::string(key) + "'");
            }
        }
        Section section{props["id"].get<std::string>(), props["axis_id"].get<std::string>(),
                        props["m_start"].get<double>(), props["m_end"].get<double>(),
                        io::detail::polyline_from_json(feat["geometry"], where)};
        if (!(section.m_end > section.m_start)) {
            throw Error(ErrorKind::schema, where + ": m_end must exceed m_start");
        }
        sections.push_back(std::move(section));
    }
    return sections;
}

}  // namespace voirie::registry
