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

#include "voirie/registry/registry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <utility>

#include <unistd.h>

#include "src/io/geojson.hpp"
#include "voirie/geometry/ops.hpp"

namespace voirie::registry {

namespace {

using io::detail::json;

// --- enum names -------------------------------------------------------------

template <typename Enum, std::size_t N>
Enum from_name(const std::string& s, const std::array<std::pair<const char*, Enum>, N>& table,
               const char* what) {
    for (const auto& [name, value] : table) {
        if (s == name) return value;
    }
    throw Error(ErrorKind::schema, std::string("unknown ") + what + " \"" + s + "\"");
}

constexpr std::array<std::pair<const char*, LayerRole>, 4> layer_role_names{{
    {"surface", LayerRole::surface},
    {"base", LayerRole::base},
    {"foundation", LayerRole::foundation},
    {"subgrade", LayerRole::subgrade},
}};

constexpr std::array<std::pair<const char*, StructureSource>, 3> structure_source_names{{
    {"core_sample", StructureSource::core_sample},
    {"trench_observation", StructureSource::trench_observation},
    {"design_document", StructureSource::design_document},
}};

constexpr std::array<std::pair<const char*, DegradationKind>, 5> degradation_kind_names{{
    {"pothole", DegradationKind::pothole},
    {"crack", DegradationKind::crack},
    {"rutting", DegradationKind::rutting},
    {"surface_wear", DegradationKind::surface_wear},
    {"other", DegradationKind::other},
}};

constexpr std::array<std::pair<const char*, CauseHint>, 3> cause_hint_names{{
    {"mechanical", CauseHint::mechanical},
    {"thermal_hydric", CauseHint::thermal_hydric},
    {"human_intervention", CauseHint::human_intervention},
}};

constexpr std::array<std::pair<const char*, EventType>, 3> event_type_names{{
    {"structure", EventType::structure},
    {"degradation", EventType::degradation},
    {"trench", EventType::trench},
}};

// --- event JSON -------------------------------------------------------------

json structure_to_json(const PavementStructure& structure) {
    json layers = json::array();
    for (const PavementLayer& layer : structure.layers) {
        layers.push_back(json{{"role", to_string(layer.role)},
                              {"material", layer.material},
                              {"thickness_m", layer.thickness_m}});
    }
    return json{{"layers", std::move(layers)},
                {"observed_at", structure.observed_at.to_iso8601()},
                {"source", to_string(structure.source)}};
}

PavementStructure structure_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("layers") || !j["layers"].is_array()) {
        throw Error(ErrorKind::schema, where + ": structure needs a \"layers\" array");
    }
    PavementStructure structure;
    for (const json& layer : j["layers"]) {
        if (!layer.is_object() || !layer.contains("role") || !layer.contains("material") ||
            !layer.contains("thickness_m") || !layer["thickness_m"].is_number()) {
            throw Error(ErrorKind::schema,
                        where + ": layer needs {role, material, thickness_m}");
        }
        structure.layers.push_back(
            PavementLayer{layer_role_from_string(layer["role"].get<std::string>()),
                          layer["material"].get<std::string>(),
                          layer["thickness_m"].get<double>()});
    }
    if (!j.contains("observed_at") || !j["observed_at"].is_string()) {
        throw Error(ErrorKind::schema, where + ": structure needs \"observed_at\"");
    }
    structure.observed_at = Timestamp::parse(j["observed_at"].get<std::string>());
    structure.source = structure_source_from_string(j.value("source", "core_sample"));
    return structure;
}

json payload_to_json(const RegistryEvent& event) {
    switch (event.type) {
        case EventType::structure: {
            const auto& obs = std::get<StructureObservation>(event.payload);
            return json{{"section_id", obs.section_id},
                        {"structure", structure_to_json(obs.structure)}};
        }
        case EventType::degradation: {
            const auto& deg = std::get<DegradationObservation>(event.payload);
            json j{{"section_id", deg.section_id},
                   {"kind", to_string(deg.kind)},
                   {"severity", deg.severity},
                   {"observed_at", deg.observed_at.to_iso8601()}};
            if (deg.cause_hint) j["cause_hint"] = to_string(*deg.cause_hint);
            return j;
        }
        case EventType::trench: {
            const auto& trench = std::get<TrenchRecord>(event.payload);
            return json{{"id", trench.id},
                        {"geometry", io::detail::area_to_json(trench.geometry)},
                        {"opened_at", trench.opened_at.to_iso8601()},
                        {"closed_at", trench.closed_at.to_iso8601()},
                        {"purpose", trench.purpose},
                        {"backfill", structure_to_json(trench.backfill)}};
        }
    }
    throw Error(ErrorKind::validation, "corrupt event type");
}

EventPayload payload_from_json(EventType type, const json& j, const std::string& where) {
    if (!j.is_object()) {
        throw Error(ErrorKind::schema, where + ": payload is not an object");
    }
    auto require_string = [&](const char* key) -> std::string {
        if (!j.contains(key) || !j[key].is_string()) {
            throw Error(ErrorKind::schema, where + ": payload needs string \"" + key + "\"");
        }
        return j[key].get<std::string>();
    };
    switch (type) {
        case EventType::structure:
            return StructureObservation{require_string("section_id"),
                                        structure_from_json(j.at("structure"), where)};
        case EventType::degradation: {
            DegradationObservation deg;
            deg.section_id = require_string("section_id");
            deg.kind = degradation_kind_from_string(require_string("kind"));
            if (!j.contains("severity") || !j["severity"].is_number_integer()) {
                throw Error(ErrorKind::schema, where + ": payload needs integer \"severity\"");
            }
            deg.severity = j["severity"].get<int>();
            deg.observed_at = Timestamp::parse(require_string("observed_at"));
            if (j.contains("cause_hint") && !j["cause_hint"].is_null()) {
                deg.cause_hint = cause_hint_from_string(j["cause_hint"].get<std::string>());
            }
            return deg;
        }
        case EventType::trench: {
            TrenchRecord trench;
            trench.id = require_string("id");
            trench.geometry = io::detail::area_from_json(j.at("geometry"), where);
            trench.opened_at = Timestamp::parse(require_string("opened_at"));
            trench.closed_at = Timestamp::parse(require_string("closed_at"));
            trench.purpose = j.value("purpose", "");
            trench.backfill = structure_from_json(j.at("backfill"), where);
            return trench;
        }
    }
    throw Error(ErrorKind::schema, where + ": unknown event type");
}

json event_to_json(const RegistryEvent& event) {
    json j{{"event_id", event.event_id},
           {"type", to_string(event.type)},
           {"recorded_at", event.recorded_at.to_iso8601()},
           {"payload", payload_to_json(event)}};
    if (!event.affected_section_ids.empty()) {
        j["affected_section_ids"] = event.affected_section_ids;
    }
    return j;
}

RegistryEvent event_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("event_id") || !j.contains("type") ||
        !j.contains("recorded_at") || !j.contains("payload")) {
        throw Error(ErrorKind::structure,
                    where + ": event needs {event_id, type, recorded_at, payload}");
    }
    RegistryEvent event;
    event.event_id = j["event_id"].get<std::uint64_t>();
    event.type = event_type_from_string(j["type"].get<std::string>());
    event.recorded_at = Timestamp::parse(j["recorded_at"].get<std::string>());
    event.payload = payload_from_json(event.type, j["payload"], where);
    if (j.contains("affected_section_ids")) {
        event.affected_section_ids = j["affected_section_ids"].get<std::vector<std::string>>();
    }
    return event;
}

// Observation instant driving the temporal semantics of an event.
Timestamp observation_time(const RegistryEvent& event) {
    switch (event.type) {
        case EventType::structure:
            return std::get<StructureObservation>(event.payload).structure.observed_at;
        case EventType::degradation:
            return std::get<DegradationObservation>(event.payload).observed_at;
        case EventType::trench:
            return std::get<TrenchRecord>(event.payload).backfill.observed_at;
    }
    return {};
}

bool event_touches_section(const RegistryEvent& event, const std::string& section_id) {
    switch (event.type) {
        case EventType::structure:
            return std::get<StructureObservation>(event.payload).section_id == section_id;
        case EventType::degradation:
            return std::get<DegradationObservation>(event.payload).section_id == section_id;
        case EventType::trench: {
            const auto& affected = event.affected_section_ids;
            return std::find(affected.begin(), affected.end(), section_id) != affected.end();
        }
    }
    return false;
}

bool is_structure_like(const RegistryEvent& event) {
    return event.type == EventType::structure || event.type == EventType::trench;
}

const PavementStructure& structure_of(const RegistryEvent& event) {
    if (event.type == EventType::structure) {
        return std::get<StructureObservation>(event.payload).structure;
    }
    return std::get<TrenchRecord>(event.payload).backfill;
}

}  // namespace

const char* to_string(LayerRole role) noexcept { return layer_role_names[static_cast<std::size_t>(role)].first; }
const char* to_string(StructureSource source) noexcept { return structure_source_names[static_cast<std::size_t>(source)].first; }
const char* to_string(DegradationKind kind) noexcept { return degradation_kind_names[static_cast<std::size_t>(kind)].first; }
const char* to_string(CauseHint hint) noexcept { return cause_hint_names[static_cast<std::size_t>(hint)].first; }
const char* to_string(EventType type) noexcept { return event_type_names[static_cast<std::size_t>(type)].first; }

LayerRole layer_role_from_string(const std::string& s) { return from_name(s, layer_role_names, "layer role"); }
StructureSource structure_source_from_string(const std::string& s) { return from_name(s, structure_source_names, "structure source"); }
DegradationKind degradation_kind_from_string(const std::string& s) { return from_name(s, degradation_kind_names, "degradation kind"); }
CauseHint cause_hint_from_string(const std::string& s) { return from_name(s, cause_hint_names, "cause hint"); }
EventType event_type_from_string(const std::string& s) { return from_name(s, event_type_names, "event type"); }

// --- EventLog ---------------------------------------------------------------

EventLog EventLog::open(const std::filesystem::path& path) {
    EventLog log;
    log.path_ = path;
    std::ifstream in(path);
    if (!in) return log;  // fresh log
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw Error(ErrorKind::structure, where + ": corrupt log line: " + e.what());
        }
        RegistryEvent event = event_from_json(j, where);
        if (!log.events_.empty() && event.event_id <= log.events_.back().event_id) {
            throw Error(ErrorKind::structure,
                        where + ": event ids must be strictly increasing");
        }
        log.events_.push_back(std::move(event));
    }
    return log;
}

std::uint64_t EventLog::last_event_id() const noexcept {
    return events_.empty() ? 0 : events_.back().event_id;
}

std::uint64_t EventLog::append(RegistryEvent event) {
    event.event_id = last_event_id() + 1;
    if (!path_.empty()) {
        const std::string line = event_to_json(event).dump();
        std::FILE* f = std::fopen(path_.string().c_str(), "a");
        if (f == nullptr) {
            throw Error(ErrorKind::io, "cannot append to " + path_.string());
        }
        const bool written = std::fputs(line.c_str(), f) >= 0 && std::fputc('\n', f) != EOF;
        // Durable before return: flush stdio buffers and the kernel cache.
        const bool flushed = std::fflush(f) == 0 && ::fsync(fileno(f)) == 0;
        std::fclose(f);
        if (!written || !flushed) {
            throw Error(ErrorKind::io, "append to " + path_.string() + " failed");
        }
    }
    events_.push_back(std::move(event));
    return events_.back().event_id;
}

// --- Registry ---------------------------------------------------------------

Registry::Registry(std::vector<Section> sections, EventLog log)
    : sections_(std::move(sections)), log_(std::move(log)) {
    section_index_by_id_.resize(sections_.size());
    for (std::size_t i = 0; i < sections_.size(); ++i) section_index_by_id_[i] = i;
    std::sort(section_index_by_id_.begin(), section_index_by_id_.end(),
              [&](std::size_t a, std::size_t b) { return sections_[a].id < sections_[b].id; });
}

const Section& Registry::section(const std::string& section_id) const {
    const auto it = std::lower_bound(
        section_index_by_id_.begin(), section_index_by_id_.end(), section_id,
        [&](std::size_t i, const std::string& id) { return sections_[i].id < id; });
    if (it == section_index_by_id_.end() || sections_[*it].id != section_id) {
        throw Error(ErrorKind::unknown_reference, "unknown section \"" + section_id + "\"");
    }
    return sections_[*it];
}

std::uint64_t Registry::record(EventType type, EventPayload payload, Timestamp recorded_at,
                               WarningLog* warnings) {
    RegistryEvent event;
    event.type = type;
    event.recorded_at = recorded_at;

    switch (type) {
        case EventType::structure: {
            auto& obs = std::get<StructureObservation>(payload);
            static_cast<void>(section(obs.section_id));  // throws on unknown reference
            validate_structure(obs.structure);
            break;
        }
        case EventType::degradation: {
            auto& deg = std::get<DegradationObservation>(payload);
            static_cast<void>(section(deg.section_id));
            if (deg.severity < 1 || deg.severity > 3) {
                throw Error(ErrorKind::validation,
                            "degradation severity must be 1..3, got " +
                                std::to_string(deg.severity));
            }
            break;
        }
        case EventType::trench: {
            auto& trench = std::get<TrenchRecord>(payload);
            if (trench.opened_at > trench.closed_at) {
                throw Error(ErrorKind::validation,
                            "trench \"" + trench.id + "\" opened after it closed");
            }
            std::string reason;
            if (!geom::is_valid(trench.geometry, reason)) {
                throw Error(ErrorKind::validation,
                            "trench \"" + trench.id + "\" geometry invalid: " + reason);
            }
            if (!(geom::area(trench.geometry) > 0.0)) {
                throw Error(ErrorKind::validation,
                            "trench \"" + trench.id + "\" has zero area");
            }
            validate_structure(trench.backfill);
            // Map to intersecting sections once, at record time.
            for (const Section& s : sections_) {
                if (geom::intersects(s.geometry, trench.geometry)) {
                    event.affected_section_ids.push_back(s.id);
                }
            }
            if (event.affected_section_ids.empty()) {
                warn(warnings, "trench \"" + trench.id + "\" intersects no section");
            }
            break;
        }
    }

    if (!log_.events().empty() && recorded_at < log_.events().back().recorded_at) {
        warn(warnings, "late entry: recorded_at " + recorded_at.to_iso8601() +
                           " precedes the previous event");
    }
    event.payload = std::move(payload);
    return log_.append(std::move(event));
}

SectionState Registry::state_at(const std::string& section_id, Timestamp t) const {
    static_cast<void>(section(section_id));  // existence check

    SectionState state;
    // Latest structure-like event by (observation time, event id).
    const RegistryEvent* latest = nullptr;
    for (const RegistryEvent& event : log_.events()) {
        if (!is_structure_like(event) || !event_touches_section(event, section_id)) continue;
        if (observation_time(event) > t) continue;
        if (latest == nullptr || observation_time(event) > observation_time(*latest) ||
            (observation_time(event) == observation_time(*latest) &&
             event.event_id > latest->event_id)) {
            latest = &event;
        }
    }
    if (latest != nullptr) state.structure = structure_of(*latest);

    for (const RegistryEvent& event : log_.events()) {
        if (event.type != EventType::degradation) continue;
        const auto& deg = std::get<DegradationObservation>(event.payload);
        if (deg.section_id != section_id || deg.observed_at > t) continue;
        const bool closed =
            latest != nullptr &&
            (observation_time(*latest) > deg.observed_at ||
             (observation_time(*latest) == deg.observed_at && latest->event_id > event.event_id));
        if (!closed) state.open_degradations.push_back(deg);
    }
    // Stable: ties in observation time keep log (event id) order.
    std::stable_sort(state.open_degradations.begin(), state.open_degradations.end(),
                     [](const DegradationObservation& a, const DegradationObservation& b) {
                         return a.observed_at < b.observed_at;
                     });
    return state;
}

CoverageReport Registry::coverage(Timestamp now, int window_days) const {
    if (sections_.empty()) return {};
    const Timestamp window_start =
        Timestamp::from_unix_seconds(now.unix_seconds() -
                                     static_cast<std::int64_t>(window_days) * 86400);
    std::size_t with_structure = 0;
    std::size_t with_recent = 0;
    for (const Section& s : sections_) {
        bool structure_known = false;
        bool recent = false;
        for (const RegistryEvent& event : log_.events()) {
            if (!event_touches_section(event, s.id)) continue;
            const Timestamp at = observation_time(event);
            if (at > now) continue;
            if (is_structure_like(event)) structure_known = true;
            if (at >= window_start) recent = true;
        }
        with_structure += structure_known ? 1 : 0;
        with_recent += recent ? 1 : 0;
    }
    const double n = static_cast<double>(sections_.size());
    return CoverageReport{static_cast<double>(with_structure) / n,
                          static_cast<double>(with_recent) / n};
}

// --- conformity -------------------------------------------------------------

void validate_structure(const PavementStructure& structure) {
    if (structure.layers.empty()) {
        throw Error(ErrorKind::validation, "pavement structure needs at least one layer");
    }
    for (std::size_t i = 0; i < structure.layers.size(); ++i) {
        const PavementLayer& layer = structure.layers[i];
        if (!(layer.thickness_m > 0.0)) {
            throw Error(ErrorKind::validation, "layer " + std::to_string(i) + " (" +
                                                   to_string(layer.role) +
                                                   ") has non-positive thickness");
        }
        if (i > 0 && static_cast<int>(layer.role) <= static_cast<int>(structure.layers[i - 1].role)) {
            throw Error(ErrorKind::validation,
                        "layer roles must be ordered top->bottom without repetition");
        }
    }
}

ConformityReport check_backfill_identity(const PavementStructure& original,
                                         const PavementStructure& backfill,
                                         double thickness_tol_m) {
    ConformityReport report;
    report.pass = true;

    auto find_layer = [](const PavementStructure& s, LayerRole role) -> const PavementLayer* {
        for (const PavementLayer& layer : s.layers) {
            if (layer.role == role) return &layer;
        }
        return nullptr;
    };

    for (const PavementLayer& layer : original.layers) {
        const PavementLayer* matching = find_layer(backfill, layer.role);
        if (matching == nullptr) {
            report.missing_or_extra_layers.push_back({layer.role, LayerDiffKind::missing});
            report.pass = false;
            continue;
        }
        LayerComparison cmp;
        cmp.role = layer.role;
        cmp.material_match = layer.material == matching->material;
        cmp.thickness_delta_m = layer.thickness_m - matching->thickness_m;
        cmp.within_tolerance = std::abs(cmp.thickness_delta_m) <= thickness_tol_m;
        if (!cmp.material_match || !cmp.within_tolerance) report.pass = false;
        report.per_layer.push_back(cmp);
    }
    for (const PavementLayer& layer : backfill.layers) {
        if (find_layer(original, layer.role) == nullptr) {
            report.missing_or_extra_layers.push_back({layer.role, LayerDiffKind::extra});
            report.pass = false;
        }
    }
    return report;
}

std::pair<EventType, EventPayload> parse_event_input(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::schema, std::string("invalid event JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string() ||
        !j.contains("payload")) {
        throw Error(ErrorKind::schema, "event submission needs {type, payload}");
    }
    const EventType type = event_type_from_string(j["type"].get<std::string>());
    return {type, payload_from_json(type, j["payload"], "event payload")};
}

}  // namespace voirie::registry
