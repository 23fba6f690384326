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

#ifndef VOIRIE_REPORT_REPORT_HPP
#define VOIRIE_REPORT_REPORT_HPP

/// @file report.hpp
/// Headline numbers out of footprints and registry state: area tables,
/// cost envelopes, the area-gap cost, a simple maintenance priority list,
/// and GeoJSON exports.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "voirie/footprint/footprint.hpp"
#include "voirie/registry/registry.hpp"
#include "voirie/report/reference_values.hpp"

namespace voirie::report {

/// Intervention cost rates in euros per square meter.
struct CostModel {
    double surface_min_eur_m2 = default_surface_min_eur_m2;
    double surface_max_eur_m2 = default_surface_max_eur_m2;
    double structure_min_eur_m2 = default_structure_min_eur_m2;
    double structure_max_eur_m2 = default_structure_max_eur_m2;
};

/// JSON object {surface_min, surface_max, structure_min, structure_max}
/// in euros per square meter; missing keys keep the defaults.
/// @throws Error{invalid_parameter} unless 0 < min <= max for each pair.
CostModel load_cost_model(const std::filesystem::path& path);
void validate_cost_model(const CostModel& model);

enum class CostBasis { surface_only, structure_only, full };

const char* to_string(CostBasis basis) noexcept;
CostBasis cost_basis_from_string(const std::string& s);

struct CostEnvelope {
    double min_eur = 0.0;
    double max_eur = 0.0;
    CostBasis basis = CostBasis::surface_only;
};

/// Cost envelope for covering `area_m2`; `full` sums the surface and
/// structure rates.  Linear in area.
/// @throws Error{invalid_parameter} on negative area.
CostEnvelope cost_envelope(double area_m2, const CostModel& model, CostBasis basis);

/// Cost of an area-estimation gap, reported as "at least min": the floor
/// uses the structure minimum rate, the envelope top the structure
/// maximum.
CostEnvelope gap_cost(double delta_area_m2, const CostModel& model);

struct AreaReportRow {
    std::string label;
    double area_m2 = 0.0;
    double area_km2 = 0.0;
    int set_count = 0;  ///< number of footprint sets summed into the row
};

struct FootprintDetail {
    std::string label;
    std::string provenance;
    double area_m2 = 0.0;
};

struct ParisReference {
    double with_dependencies_km2 = paris_with_dependencies_km2;
    double carriageway_only_km2 = paris_carriageway_only_km2;
};

struct AreaReport {
    std::vector<AreaReportRow> rows;  ///< per label, first-appearance order
    std::vector<FootprintDetail> details;
    double total_m2 = 0.0;
    std::optional<ParisReference> paris_reference;  ///< set on request
};

AreaReport area_report(std::span<const footprint::FootprintSet> footprints,
                       bool include_paris_reference = false);
std::string render_text(const AreaReport& report);

struct PriorityEntry {
    std::string section_id;
    double score = 0.0;
};

/// Sections ranked by open-degradation urgency.  Per open degradation the
/// score is severity x (1 + years open), years counted as days/365;
/// sections tie-break by id.  Sections without open degradations are
/// omitted.  Deliberately simple; meant as a placeholder ranking.
std::vector<PriorityEntry> maintenance_priority(const registry::Registry& registry,
                                                registry::Timestamp now);

// --- GeoJSON exports --------------------------------------------------------
// Everything written here re-loads through the matching loader with
// identical ids, categories, and areas.

void export_footprints(std::span<const footprint::FootprintSet> footprints,
                       const std::filesystem::path& path);
std::vector<footprint::FootprintSet> load_footprints(const std::filesystem::path& path);

void export_axes(std::span<const io::RoadAxis> axes, const std::filesystem::path& path);
void export_parcels(std::span<const io::CadastralParcel> parcels,
                    const std::filesystem::path& path);
void export_boundary(const io::StudyBoundary& boundary, const std::filesystem::path& path);

}  // namespace voirie::report

#endif  // VOIRIE_REPORT_REPORT_HPP
