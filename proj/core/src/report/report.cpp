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

#include "voirie/report/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <utility>

#include "src/io/geojson.hpp"
#include "voirie/geometry/ops.hpp"

namespace voirie::report {

namespace {

using io::detail::json;

}  // namespace

CostModel load_cost_model(const std::filesystem::path& path) {
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
        throw Error(ErrorKind::schema, path.string() + ": cost model must be a JSON object");
    }
    CostModel model;
    auto read = [&](const char* key, double& into) {
        if (doc.contains(key)) {
            if (!doc[key].is_number()) {
                throw Error(ErrorKind::schema,
                            path.string() + ": \"" + key + "\" is not a number");
            }
            into = doc[key].get<double>();
        }
    };
    read("surface_min", model.surface_min_eur_m2);
    read("surface_max", model.surface_max_eur_m2);
    read("structure_min", model.structure_min_eur_m2);
    read("structure_max", model.structure_max_eur_m2);
    validate_cost_model(model);
    return model;
}

void validate_cost_model(const CostModel& model) {
    auto check = [](double lo, double hi, const char* what) {
        if (!(lo > 0.0) || !(lo <= hi)) {
            throw Error(ErrorKind::invalid_parameter,
                        std::string("cost model: need 0 < min <= max for ") + what);
        }
    };
    check(model.surface_min_eur_m2, model.surface_max_eur_m2, "surface rates");
    check(model.structure_min_eur_m2, model.structure_max_eur_m2, "structure rates");
}

const char* to_string(CostBasis basis) noexcept {
    switch (basis) {
        case CostBasis::surface_only: return "surface_only";
        case CostBasis::structure_only: return "structure_only";
        case CostBasis::full: return "full";
    }
    return "?";
}

CostBasis cost_basis_from_string(const std::string& s) {
    if (s == "surface_only") return CostBasis::surface_only;
    if (s == "structure_only") return CostBasis::structure_only;
    if (s == "full") return CostBasis::full;
    throw Error(ErrorKind::invalid_parameter, "unknown cost basis \"" + s + "\"");
}

CostEnvelope cost_envelope(double area_m2, const CostModel& model, CostBasis basis) {
    if (area_m2 < 0.0) {
        throw Error(ErrorKind::invalid_parameter, "area must be >= 0");
    }
    validate_cost_model(model);
    double min_rate = 0.0, max_rate = 0.0;
    switch (basis) {
        case CostBasis::surface_only:
            min_rate = model.surface_min_eur_m2;
            max_rate = model.surface_max_eur_m2;
            break;
        case CostBasis::structure_only:
            min_rate = model.structure_min_eur_m2;
            max_rate = model.structure_max_eur_m2;
            break;
        case CostBasis::full:
            min_rate = model.surface_min_eur_m2 + model.structure_min_eur_m2;
            max_rate = model.surface_max_eur_m2 + model.structure_max_eur_m2;
            break;
    }
    return CostEnvelope{area_m2 * min_rate, area_m2 * max_rate, basis};
}

CostEnvelope gap_cost(double delta_area_m2, const CostModel& model) {
    return cost_envelope(delta_area_m2, model, CostBasis::structure_only);
}

AreaReport area_report(std::span<const footprint::FootprintSet> footprints,
                       bool include_paris_reference) {
    AreaReport report;
    std::map<std::string, std::size_t> row_by_label;
    for (const footprint::FootprintSet& set : footprints) {
        const std::string label = footprint::to_string(set.label);
        auto [it, inserted] = row_by_label.try_emplace(label, report.rows.size());
        if (inserted) {
            report.rows.push_back(AreaReportRow{label, 0.0, 0.0, 0});
        }
        AreaReportRow& row = report.rows[it->second];
        row.area_m2 += set.area_m2;
        row.area_km2 = row.area_m2 / 1e6;
        row.set_count += 1;
        report.total_m2 += set.area_m2;
        report.details.push_back(
            FootprintDetail{label, footprint::to_string(set.provenance), set.area_m2});
    }
    if (include_paris_reference) report.paris_reference = ParisReference{};
    return report;
}

std::string render_text(const AreaReport& report) {
    std::ostringstream out;
    out << std::fixed;
    out << std::left << std::setw(14) << "label" << std::right << std::setw(16) << "area_m2"
        << std::setw(12) << "area_km2" << std::setw(6) << "sets" << "\n";
    for (const AreaReportRow& row : report.rows) {
        out << std::left << std::setw(14) << row.label << std::right << std::setw(16)
            << std::setprecision(1) << row.area_m2 << std::setw(12) << std::setprecision(6)
            << row.area_km2 << std::setw(6) << row.set_count << "\n";
    }
    out << std::left << std::setw(14) << "total" << std::right << std::setw(16)
        << std::setprecision(1) << report.total_m2 << std::setw(12) << std::setprecision(6)
        << report.total_m2 / 1e6 << "\n";
    if (report.paris_reference) {
        out << "reference: Paris ~" << std::setprecision(0)
            << report.paris_reference->with_dependencies_km2
            << " km2 with dependencies, ~" << report.paris_reference->carriageway_only_km2
            << " km2 carriageway only (published estimates)\n";
    }
    return out.str();
}

std::vector<PriorityEntry> maintenance_priority(const registry::Registry& registry,
                                                registry::Timestamp now) {
    std::vector<PriorityEntry> entries;
    for (const registry::Section& section : registry.sections()) {
        const registry::SectionState state = registry.state_at(section.id, now);
        double score = 0.0;
        for (const registry::DegradationObservation& deg : state.open_degradations) {
            const double years_open = registry::days_between(deg.observed_at, now) / 365.0;
            score += deg.severity * (1.0 + years_open);
        }
        if (score > 0.0) entries.push_back(PriorityEntry{section.id, score});
    }
    std::sort(entries.begin(), entries.end(), [](const PriorityEntry& a, const PriorityEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.section_id < b.section_id;
    });
    return entries;
}

// --- GeoJSON exports --------------------------------------------------------

void export_footprints(std::span<const footprint::FootprintSet> footprints,
                       const std::filesystem::path& path) {
    json features = json::array();
    for (const footprint::FootprintSet& set : footprints) {
        features.push_back(io::detail::feature(
            io::detail::area_to_json(set.geometry),
            json{{"label", footprint::to_string(set.label)},
                 {"area_m2", set.area_m2},
                 {"provenance", footprint::to_string(set.provenance)},
                 {"boundary_label", set.params.boundary_label},
                 {"width_rules_hash", set.params.width_rules_hash},
                 {"params_hash", set.params.hash()}}));
    }
    io::detail::write_json_file(io::detail::feature_collection(std::move(features)), path);
}

std::vector<footprint::FootprintSet> load_footprints(const std::filesystem::path& path) {
    const json doc = io::detail::load_feature_collection(path);
    const json& features = doc["features"];
    std::vector<footprint::FootprintSet> sets;
    sets.reserve(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        const std::string where = path.string() + ": features[" + std::to_string(i) + "]";
        const json& feat = features[i];
        if (!feat.is_object() || !feat.contains("properties") || !feat["properties"].is_object()) {
            throw Error(ErrorKind::schema, where + ": missing properties");
        }
        const json& props = feat["properties"];
        for (const char* key : {"label", "area_m2", "provenance"}) {
            if (!props.contains(key)) {
                throw Error(ErrorKind::schema,
                            where + ": missing property '" + std::string(key) + "'");
            }
        }
        footprint::FootprintSet set;
        set.label = footprint::label_from_string(props["label"].get<std::string>());
        set.provenance = footprint::provenance_from_string(props["provenance"].get<std::string>());
        set.geometry = io::detail::area_from_json(feat["geometry"], where);
        set.area_m2 = props["area_m2"].get<double>();
        set.params.boundary_label = props.value("boundary_label", "");
        set.params.width_rules_hash = props.value("width_rules_hash", "");
        sets.push_back(std::move(set));
    }
    return sets;
}

void export_axes(std::span<const io::RoadAxis> axes, const std::filesystem::path& path) {
    json features = json::array();
    for (const io::RoadAxis& axis : axes) {
        json props{{"id", axis.id}, {"category", axis.category}};
        if (axis.measured_width_m) props["measured_width"] = *axis.measured_width_m;
        if (axis.name) props["name"] = *axis.name;
        features.push_back(
            io::detail::feature(io::detail::polyline_to_json(axis.geometry), std::move(props)));
    }
    io::detail::write_json_file(io::detail::feature_collection(std::move(features)), path);
}

void export_parcels(std::span<const io::CadastralParcel> parcels,
                    const std::filesystem::path& path) {
    json features = json::array();
    for (const io::CadastralParcel& parcel : parcels) {
        features.push_back(io::detail::feature(io::detail::area_to_json(parcel.geometry),
                                               json{{"id", parcel.id}}));
    }
    io::detail::write_json_file(io::detail::feature_collection(std::move(features)), path);
}

void export_boundary(const io::StudyBoundary& boundary, const std::filesystem::path& path) {
    json features = json::array();
    features.push_back(io::detail::feature(io::detail::area_to_json(boundary.geometry),
                                           json{{"label", boundary.label}}));
    io::detail::write_json_file(io::detail::feature_collection(std::move(features)), path);
}

}  // namespace voirie::report
