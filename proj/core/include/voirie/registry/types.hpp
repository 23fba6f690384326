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

#ifndef VOIRIE_REGISTRY_TYPES_HPP
#define VOIRIE_REGISTRY_TYPES_HPP

/// @file types.hpp
/// Technical description of the road: sections, pavement structures,
/// degradations, trenches, and the append-only event record tying them to
/// time.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "voirie/geometry/types.hpp"
#include "voirie/registry/time.hpp"

namespace voirie::registry {

/// A <= 10 m slice of an axis; slices of one axis are contiguous,
/// non-overlapping, and cover [0, length].
struct Section {
    std::string id;  ///< "<axis_id>:<index>", index from 0
    std::string axis_id;
    double m_start = 0.0;  ///< meters along the axis
    double m_end = 0.0;
    geom::Polyline geometry;
};

/// Top-to-bottom position of a layer in the pavement stack.
enum class LayerRole { surface, base, foundation, subgrade };

enum class StructureSource { core_sample, trench_observation, design_document };

struct PavementLayer {
    LayerRole role = LayerRole::surface;
    std::string material;  ///< canonical material code (e.g. "BBSG", "GNT")
    double thickness_m = 0.0;
};

/// Ordered layer stack (top -> bottom, each role at most once).
struct PavementStructure {
    std::vector<PavementLayer> layers;
    Timestamp observed_at;
    StructureSource source = StructureSource::core_sample;
};

enum class DegradationKind { pothole, crack, rutting, surface_wear, other };
enum class CauseHint { mechanical, thermal_hydric, human_intervention };

struct DegradationObservation {
    std::string section_id;
    DegradationKind kind = DegradationKind::other;
    int severity = 1;  ///< 1 (light) .. 3 (severe)
    Timestamp observed_at;
    std::optional<CauseHint> cause_hint;
};

/// Excavation for utility works and how it was backfilled.  The backfill
/// stack acts as the new structure of every section the trench touches.
struct TrenchRecord {
    std::string id;
    geom::AreaGeometry geometry;
    Timestamp opened_at;
    Timestamp closed_at;
    std::string purpose;  ///< network type: "fibre", "géothermie", ...
    PavementStructure backfill;
};

/// A structure observation attached to one section.
struct StructureObservation {
    std::string section_id;
    PavementStructure structure;
};

enum class EventType { structure, degradation, trench };

using EventPayload = std::variant<StructureObservation, DegradationObservation, TrenchRecord>;

struct RegistryEvent {
    std::uint64_t event_id = 0;  ///< strictly increasing in the log
    EventType type = EventType::structure;
    Timestamp recorded_at;
    EventPayload payload;
    /// Sections a trench intersects, resolved once at record time so that
    /// replay never depends on geometry re-evaluation.  Empty for other
    /// event types.
    std::vector<std::string> affected_section_ids;
};

const char* to_string(LayerRole role) noexcept;
const char* to_string(StructureSource source) noexcept;
const char* to_string(DegradationKind kind) noexcept;
const char* to_string(CauseHint hint) noexcept;
const char* to_string(EventType type) noexcept;

LayerRole layer_role_from_string(const std::string& s);
StructureSource structure_source_from_string(const std::string& s);
DegradationKind degradation_kind_from_string(const std::string& s);
CauseHint cause_hint_from_string(const std::string& s);
EventType event_type_from_string(const std::string& s);

}  // namespace voirie::registry

#endif  // VOIRIE_REGISTRY_TYPES_HPP
