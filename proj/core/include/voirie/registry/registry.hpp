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

#ifndef VOIRIE_REGISTRY_REGISTRY_HPP
#define VOIRIE_REGISTRY_REGISTRY_HPP

/// @file registry.hpp
/// Event-sourced registry of pavement structures, degradations, and
/// trench/backfill records over 10 m axis sections.
///
/// Persistence is an append-only log, one JSON object per line, with
/// event ids assigned at append.  Queries are pure functions of a log
/// snapshot: replaying any permutation of the same events (sorted back by
/// id) reproduces identical states.
///
/// Temporal semantics:
///  - the structure of a section at time t is the payload of the latest
///    structure or trench-backfill event observed at or before t;
///  - a structure event closes the degradations observed before it
///    (maintenance renews the pavement);
///  - late entries (recorded_at going backwards) are allowed and only
///    warned about; queries order by observation time, then event id.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "voirie/error.hpp"
#include "voirie/io/loaders.hpp"
#include "voirie/registry/types.hpp"

namespace voirie::registry {

/// Cuts every axis into contiguous sections of `step_m` meters (the last
/// section takes the remainder).  Section ids are "<axis_id>:<index>".
/// @throws Error{invalid_parameter} when step_m <= 0.
std::vector<Section> build_sections(std::span<const io::RoadAxis> axes, double step_m = 10.0);

/// Section table as a GeoJSON feature collection with properties
/// {id, axis_id, m_start, m_end}.
void save_sections(std::span<const Section> sections, const std::filesystem::path& path);
std::vector<Section> load_sections(const std::filesystem::path& path);

/// Append-only JSON-lines event log.
class EventLog {
public:
    /// In-memory log (no durability), for scratch work and tests.
    EventLog() = default;

    /// Opens or creates a file-backed log and replays its contents.
    /// @throws Error{structure} on non-monotone event ids or corrupt lines.
    static EventLog open(const std::filesystem::path& path);

    [[nodiscard]] const std::vector<RegistryEvent>& events() const noexcept { return events_; }
    [[nodiscard]] std::uint64_t last_event_id() const noexcept;

    /// Assigns the next id, appends, and (for file-backed logs) flushes to
    /// disk before returning.
    std::uint64_t append(RegistryEvent event);

private:
    std::filesystem::path path_;  // empty for in-memory logs
    std::vector<RegistryEvent> events_;
};

struct SectionState {
    std::optional<PavementStructure> structure;
    std::vector<DegradationObservation> open_degradations;
};

struct CoverageReport {
    double pct_with_structure = 0.0;      ///< fraction of sections in [0,1]
    double pct_with_recent_survey = 0.0;  ///< any observation within the window
};

/// Sections plus their event log.  Single writer; queries are const and
/// pure given the current snapshot.
class Registry {
public:
    explicit Registry(std::vector<Section> sections, EventLog log = EventLog());

    [[nodiscard]] const std::vector<Section>& sections() const noexcept { return sections_; }
    [[nodiscard]] const EventLog& log() const noexcept { return log_; }

    /// @throws Error{unknown_reference}
    [[nodiscard]] const Section& section(const std::string& section_id) const;

    /// Validates and appends one event.  Trench payloads are mapped to the
    /// sections they intersect here, at record time.
    /// @throws Error{unknown_reference} for unknown sections;
    ///         Error{validation} for invariant violations.
    std::uint64_t record(EventType type, EventPayload payload, Timestamp recorded_at,
                         WarningLog* warnings = nullptr);

    /// State of a section at time t (see file comment for the semantics).
    /// @throws Error{unknown_reference}
    [[nodiscard]] SectionState state_at(const std::string& section_id, Timestamp t) const;

    /// Information coverage over all sections: structures known at `now`,
    /// and any survey activity within the trailing window.
    [[nodiscard]] CoverageReport coverage(Timestamp now, int window_days) const;

private:
    std::vector<Section> sections_;
    std::vector<std::size_t> section_index_by_id_;  // sorted by id for lookup
    EventLog log_;
};

// --- backfill conformity ---------------------------------------------------

/// Per-role comparison of an original stack against its backfill.
struct LayerComparison {
    LayerRole role = LayerRole::surface;
    bool material_match = false;
    double thickness_delta_m = 0.0;  ///< original minus backfill
    bool within_tolerance = false;
};

enum class LayerDiffKind { missing, extra };

struct LayerDiff {
    LayerRole role = LayerRole::surface;
    LayerDiffKind kind = LayerDiffKind::missing;
};

struct ConformityReport {
    bool pass = false;
    std::vector<LayerComparison> per_layer;
    std::vector<LayerDiff> missing_or_extra_layers;
};

/// Checks the "backfill identical to the original" obligation: same
/// materials per role and thicknesses within the tolerance (default 1 cm,
/// core-sample measurement precision).  Always returns a report.
ConformityReport check_backfill_identity(const PavementStructure& original,
                                         const PavementStructure& backfill,
                                         double thickness_tol_m = 0.01);

/// @throws Error{validation} unless layers are non-empty, positive, and
///         strictly ordered top->bottom without repetition.
void validate_structure(const PavementStructure& structure);

/// Parses an event submission {"type": ..., "payload": {...}} (the format
/// accepted on the command line; trench geometry is GeoJSON).
/// @throws Error{schema|validation}
std::pair<EventType, EventPayload> parse_event_input(const std::string& json_text);

}  // namespace voirie::registry

#endif  // VOIRIE_REGISTRY_REGISTRY_HPP
