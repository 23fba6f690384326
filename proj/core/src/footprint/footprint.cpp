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

#include "voirie/footprint/footprint.hpp"

#include <cstdint>
#include <sstream>
#include <utility>
#include <vector>

namespace voirie::footprint {

namespace {

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

FootprintSet make_set(Label label, geom::AreaGeometry geometry, Provenance provenance,
                      FootprintParams params) {
    FootprintSet set;
    set.label = label;
    set.area_m2 = geom::area(geometry);
    set.geometry = std::move(geometry);
    set.provenance = provenance;
    set.params = std::move(params);
    return set;
}

}  // namespace

const char* to_string(Label label) noexcept {
    switch (label) {
        case Label::carriageway: return "carriageway";
        case Label::public_space: return "public_space";
        case Label::dependency: return "dependency";
        case Label::unexplained: return "unexplained";
    }
    return "?";
}

const char* to_string(Provenance provenance) noexcept {
    switch (provenance) {
        case Provenance::centerline: return "centerline";
        case Provenance::cadastre: return "cadastre";
        case Provenance::combined: return "combined";
    }
    return "?";
}

Label label_from_string(const std::string& s) {
    if (s == "carriageway") return Label::carriageway;
    if (s == "public_space") return Label::public_space;
    if (s == "dependency") return Label::dependency;
    if (s == "unexplained") return Label::unexplained;
    throw Error(ErrorKind::schema, "unknown footprint label \"" + s + "\"");
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "centerline") return Provenance::centerline;
    if (s == "cadastre") return Provenance::cadastre;
    if (s == "combined") return Provenance::combined;
    throw Error(ErrorKind::schema, "unknown footprint provenance \"" + s + "\"");
}

std::string FootprintParams::hash() const {
    return fnv1a_hex(width_rules_hash + "|" + boundary_label);
}

double assign_width(const io::RoadAxis& axis, const io::WidthRules& rules) noexcept {
    if (axis.measured_width_m) return *axis.measured_width_m;
    if (const auto it = rules.width_by_category.find(axis.category);
        it != rules.width_by_category.end()) {
        return it->second;
    }
    return rules.fallback_width_m;
}

FootprintSet build_centerline_footprint(std::span<const io::RoadAxis> axes,
                                        const io::WidthRules& rules,
                                        const io::StudyBoundary& boundary) {
    std::vector<geom::AreaGeometry> strips;
    strips.reserve(axes.size());
    for (const io::RoadAxis& axis : axes) {
        strips.push_back(geom::buffer_polyline(axis.geometry, assign_width(axis, rules)));
    }
    geom::AreaGeometry merged = geom::union_all(strips);
    geom::AreaGeometry clipped =
        geom::boolean_op(merged, boundary.geometry, geom::BooleanMode::intersection);
    return make_set(Label::carriageway, std::move(clipped), Provenance::centerline,
                    FootprintParams{rules.content_hash(), boundary.label});
}

FootprintSet build_cadastral_footprint(std::span<const io::CadastralParcel> parcels,
                                       const io::StudyBoundary& boundary,
                                       WarningLog* warnings) {
    std::vector<geom::AreaGeometry> shapes;
    shapes.reserve(parcels.size());
    for (const io::CadastralParcel& parcel : parcels) shapes.push_back(parcel.geometry);
    geom::AreaGeometry merged = geom::union_all(shapes);

    const double outside =
        geom::area(geom::boolean_op(merged, boundary.geometry, geom::BooleanMode::difference));
    if (outside > 0.0) {
        warn(warnings, "parcels extend " + std::to_string(outside) +
                           " m2 outside the boundary; clipped");
    }
    geom::AreaGeometry complement =
        geom::boolean_op(boundary.geometry, merged, geom::BooleanMode::difference);
    return make_set(Label::public_space, std::move(complement), Provenance::cadastre,
                    FootprintParams{"", boundary.label});
}

CombinedFootprints combine_footprints(const FootprintSet& carriageway,
                                      const FootprintSet& public_space) {
    if (carriageway.label != Label::carriageway || public_space.label != Label::public_space) {
        throw Error(ErrorKind::inconsistent_inputs,
                    "combine expects a carriageway set and a public_space set");
    }
    if (carriageway.params.boundary_label != public_space.params.boundary_label) {
        throw Error(ErrorKind::inconsistent_inputs,
                    "footprints were built against different boundaries (\"" +
                        carriageway.params.boundary_label + "\" vs \"" +
                        public_space.params.boundary_label + "\")");
    }
    FootprintParams params{carriageway.params.width_rules_hash,
                           carriageway.params.boundary_label};

    CombinedFootprints out{
        make_set(Label::carriageway,
                 geom::boolean_op(carriageway.geometry, public_space.geometry,
                                  geom::BooleanMode::intersection),
                 Provenance::combined, params),
        make_set(Label::dependency,
                 geom::boolean_op(public_space.geometry, carriageway.geometry,
                                  geom::BooleanMode::difference),
                 Provenance::combined, params),
        make_set(Label::unexplained,
                 geom::boolean_op(carriageway.geometry, public_space.geometry,
                                  geom::BooleanMode::difference),
                 Provenance::combined, params),
    };
    return out;
}

ComparisonMetrics compare_footprints(const FootprintSet& a, const FootprintSet& b) {
    if (a.params.boundary_label != b.params.boundary_label) {
        throw Error(ErrorKind::inconsistent_inputs,
                    "footprints were built against different boundaries (\"" +
                        a.params.boundary_label + "\" vs \"" + b.params.boundary_label + "\")");
    }
    ComparisonMetrics m;
    m.area_a_m2 = a.area_m2;
    m.area_b_m2 = b.area_m2;
    m.area_intersection_m2 =
        geom::area(geom::boolean_op(a.geometry, b.geometry, geom::BooleanMode::intersection));
    m.area_a_minus_b_m2 =
        geom::area(geom::boolean_op(a.geometry, b.geometry, geom::BooleanMode::difference));
    m.area_b_minus_a_m2 =
        geom::area(geom::boolean_op(b.geometry, a.geometry, geom::BooleanMode::difference));
    const double union_area = m.area_a_m2 + m.area_b_m2 - m.area_intersection_m2;
    m.iou = union_area > 0.0 ? m.area_intersection_m2 / union_area : 0.0;
    return m;
}

}  // namespace voirie::footprint
