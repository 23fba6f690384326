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

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "voirie/error.hpp"
#include "voirie/footprint/footprint.hpp"
#include "voirie/io/loaders.hpp"
#include "voirie/lexicon/lexicon.hpp"
#include "voirie/registry/registry.hpp"
#include "voirie/report/report.hpp"

namespace voirie::cli {

namespace {

using json = nlohmann::json;

struct Context {
    std::string output;
    WarningLog warnings;
};

// Flat "key: value" rendering for --format text.
std::string to_text(const json& j) {
    std::ostringstream out;
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
        }
    } else if (j.is_array()) {
        for (const json& item : j) out << item.dump() << "\n";
    } else {
        out << j.dump() << "\n";
    }
    return out.str();
}

void emit(Context& ctx, const json& payload, const std::string& format) {
    ctx.output = format == "text" ? to_text(payload) : payload.dump(2) + "\n";
}

registry::Timestamp parse_now(const std::string& now_flag) {
    if (now_flag.empty()) return registry::Timestamp::now();
    return registry::Timestamp::parse(now_flag);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::io, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json structure_to_json(const registry::PavementStructure& structure) {
    json layers = json::array();
    for (const auto& layer : structure.layers) {
        layers.push_back(json{{"role", registry::to_string(layer.role)},
                              {"material", layer.material},
                              {"thickness_m", layer.thickness_m}});
    }
    return json{{"layers", std::move(layers)},
                {"observed_at", structure.observed_at.to_iso8601()},
                {"source", registry::to_string(structure.source)}};
}

json degradation_to_json(const registry::DegradationObservation& deg) {
    json j{{"section_id", deg.section_id},
           {"kind", registry::to_string(deg.kind)},
           {"severity", deg.severity},
           {"observed_at", deg.observed_at.to_iso8601()}};
    if (deg.cause_hint) j["cause_hint"] = registry::to_string(*deg.cause_hint);
    return j;
}

json footprint_summary(const footprint::FootprintSet& set) {
    return json{{"label", footprint::to_string(set.label)},
                {"provenance", footprint::to_string(set.provenance)},
                {"area_m2", set.area_m2},
                {"boundary_label", set.params.boundary_label}};
}

void add_format_flag(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;
    Context ctx;

    CLI::App app{"voirie - road footprints, lexicon, and pavement registry"};
    app.require_subcommand(1);

    // Shared option storage.  Each subcommand registers the flags it needs.
    std::string axes_path, parcels_path, boundary_path, widths_path, lexicon_path;
    std::string cost_model_path, log_path, sections_path, out_path, now_flag;
    std::string format = "json";
    std::string word, event_file, section_id, basis_str;
    double step = 10.0;
    double area_m2 = 0.0, delta_km2 = -1.0, delta_m2 = -1.0;
    int window_days = 365;
    bool paris_reference = false;
    std::string export_axes_in, export_parcels_in, export_boundary_in, export_footprints_in,
        export_sections_in;

    auto load_model = [&]() {
        return cost_model_path.empty() ? report::CostModel{}
                                       : report::load_cost_model(cost_model_path);
    };
    auto build_centerline = [&]() {
        const auto axes = io::load_axes(axes_path);
        const auto rules = io::load_width_rules(widths_path);
        const auto boundary = io::load_boundary(boundary_path);
        return footprint::build_centerline_footprint(axes, rules, boundary);
    };
    auto build_cadastre = [&]() {
        const auto parcels = io::load_parcels(parcels_path, &ctx.warnings);
        const auto boundary = io::load_boundary(boundary_path);
        return footprint::build_cadastral_footprint(parcels, boundary, &ctx.warnings);
    };
    auto open_registry = [&]() {
        return registry::Registry(registry::load_sections(sections_path),
                                  registry::EventLog::open(log_path));
    };

    // --- footprint ----------------------------------------------------------
    CLI::App* footprint_cmd = app.add_subcommand("footprint", "Build and compare road footprints");
    footprint_cmd->require_subcommand(1);

    CLI::App* centerline = footprint_cmd->add_subcommand(
        "centerline", "Carriageway estimate from buffered axis centerlines");
    centerline->add_option("--axes", axes_path, "Axes GeoJSON")->required();
    centerline->add_option("--widths", widths_path, "Width rules JSON")->required();
    centerline->add_option("--boundary", boundary_path, "Boundary GeoJSON")->required();
    centerline->add_option("-o,--output", out_path, "Write the footprint as GeoJSON");
    add_format_flag(centerline, format);
    centerline->callback([&] {
        const auto set = build_centerline();
        if (!out_path.empty()) {
            const std::vector<footprint::FootprintSet> sets{set};
            report::export_footprints(sets, out_path);
        }
        emit(ctx, footprint_summary(set), format);
    });

    CLI::App* cadastre = footprint_cmd->add_subcommand(
        "cadastre", "Public-space estimate as boundary minus cadastral parcels");
    cadastre->add_option("--parcels", parcels_path, "Parcels GeoJSON")->required();
    cadastre->add_option("--boundary", boundary_path, "Boundary GeoJSON")->required();
    cadastre->add_option("-o,--output", out_path, "Write the footprint as GeoJSON");
    add_format_flag(cadastre, format);
    cadastre->callback([&] {
        const auto set = build_cadastre();
        if (!out_path.empty()) {
            const std::vector<footprint::FootprintSet> sets{set};
            report::export_footprints(sets, out_path);
        }
        emit(ctx, footprint_summary(set), format);
    });

    CLI::App* combine = footprint_cmd->add_subcommand(
        "combine", "Split public space into carriageway / dependency / unexplained");
    combine->add_option("--axes", axes_path)->required();
    combine->add_option("--widths", widths_path)->required();
    combine->add_option("--parcels", parcels_path)->required();
    combine->add_option("--boundary", boundary_path)->required();
    combine->add_option("-o,--output", out_path, "Write the three sets as GeoJSON");
    add_format_flag(combine, format);
    combine->callback([&] {
        const auto combined = footprint::combine_footprints(build_centerline(), build_cadastre());
        if (!out_path.empty()) {
            const std::vector<footprint::FootprintSet> sets{
                combined.carriageway, combined.dependency, combined.unexplained};
            report::export_footprints(sets, out_path);
        }
        emit(ctx,
             json{{"carriageway_m2", combined.carriageway.area_m2},
                  {"dependency_m2", combined.dependency.area_m2},
                  {"unexplained_m2", combined.unexplained.area_m2},
                  {"boundary_label", combined.carriageway.params.boundary_label}},
             format);
    });

    CLI::App* compare =
        footprint_cmd->add_subcommand("compare", "Overlap metrics between the two approaches");
    compare->add_option("--axes", axes_path)->required();
    compare->add_option("--widths", widths_path)->required();
    compare->add_option("--parcels", parcels_path)->required();
    compare->add_option("--boundary", boundary_path)->required();
    add_format_flag(compare, format);
    compare->callback([&] {
        const auto metrics = footprint::compare_footprints(build_centerline(), build_cadastre());
        emit(ctx,
             json{{"area_a_m2", metrics.area_a_m2},
                  {"area_b_m2", metrics.area_b_m2},
                  {"area_intersection_m2", metrics.area_intersection_m2},
                  {"area_a_minus_b_m2", metrics.area_a_minus_b_m2},
                  {"area_b_minus_a_m2", metrics.area_b_minus_a_m2},
                  {"iou", metrics.iou}},
             format);
    });

    // --- lexicon --------------------------------------------------------------
    CLI::App* lexicon_cmd = app.add_subcommand("lexicon", "Validate and query the road lexicon");
    lexicon_cmd->require_subcommand(1);

    CLI::App* validate = lexicon_cmd->add_subcommand("validate", "Validate a lexicon file");
    validate->add_option("file", lexicon_path, "Lexicon JSON file")->required();
    add_format_flag(validate, format);
    validate->callback([&] {
        const auto lex = lexicon::load_lexicon(lexicon_path);
        emit(ctx,
             json{{"status", "valid"},
                  {"version", lex.version()},
                  {"node_count", lex.nodes().size()}},
             format);
    });

    CLI::App* resolve = lexicon_cmd->add_subcommand("resolve", "Resolve a word to a canonical term");
    resolve->add_option("word", word, "Word to resolve")->required();
    resolve->add_option("--lexicon", lexicon_path, "Lexicon JSON file")->required();
    add_format_flag(resolve, format);
    resolve->callback([&] {
        const auto lex = lexicon::load_lexicon(lexicon_path);
        const auto resolved = lex.resolve(word);
        if (!resolved.ambiguous()) {
            emit(ctx, json{{"input", word}, {"canonical", *resolved.canonical}}, format);
            return;
        }
        json senses = json::array();
        for (const auto& candidate : resolved.candidates) {
            senses.push_back(json{{"term", candidate.term}, {"definition", candidate.definition}});
        }
        emit(ctx, json{{"input", word}, {"ambiguous", true}, {"senses", std::move(senses)}},
             format);
    });

    // --- sections -------------------------------------------------------------
    CLI::App* sections_cmd = app.add_subcommand("sections", "Linear referencing over axes");
    sections_cmd->require_subcommand(1);

    CLI::App* sections_build = sections_cmd->add_subcommand("build", "Cut axes into sections");
    sections_build->add_option("--axes", axes_path)->required();
    sections_build->add_option("--step", step, "Section step in meters")->capture_default_str();
    sections_build->add_option("-o,--output", out_path, "Write the section table as GeoJSON");
    add_format_flag(sections_build, format);
    sections_build->callback([&] {
        const auto axes = io::load_axes(axes_path);
        const auto sections = registry::build_sections(axes, step);
        if (!out_path.empty()) registry::save_sections(sections, out_path);
        emit(ctx,
             json{{"axis_count", axes.size()},
                  {"section_count", sections.size()},
                  {"step_m", step}},
             format);
    });

    // --- registry ---------------------------------------------------------------
    CLI::App* registry_cmd = app.add_subcommand("registry", "Append to and query the event log");
    registry_cmd->require_subcommand(1);

    CLI::App* append = registry_cmd->add_subcommand("append", "Append one event to the log");
    append->add_option("event", event_file, "Event JSON file: {type, payload}")->required();
    append->add_option("--log", log_path, "Event log (JSON lines)")->required();
    append->add_option("--sections", sections_path, "Section table GeoJSON")->required();
    append->add_option("--now", now_flag, "Recording instant (ISO-8601), defaults to wall clock");
    add_format_flag(append, format);
    append->callback([&] {
        auto reg = open_registry();
        auto [type, payload] = registry::parse_event_input(read_file(event_file));
        const auto id = reg.record(type, std::move(payload), parse_now(now_flag), &ctx.warnings);
        emit(ctx, json{{"event_id", id}}, format);
    });

    CLI::App* state = registry_cmd->add_subcommand("state", "Section state at a given time");
    state->add_option("--log", log_path)->required();
    state->add_option("--sections", sections_path)->required();
    state->add_option("--section-id", section_id)->required();
    state->add_option("--now", now_flag, "Query instant (ISO-8601)");
    add_format_flag(state, format);
    state->callback([&] {
        const auto reg = open_registry();
        const auto snapshot = reg.state_at(section_id, parse_now(now_flag));
        json degradations = json::array();
        for (const auto& deg : snapshot.open_degradations) {
            degradations.push_back(degradation_to_json(deg));
        }
        emit(ctx,
             json{{"section_id", section_id},
                  {"structure",
                   snapshot.structure ? structure_to_json(*snapshot.structure) : json(nullptr)},
                  {"open_degradations", std::move(degradations)}},
             format);
    });

    CLI::App* coverage = registry_cmd->add_subcommand("coverage", "Information coverage per section");
    coverage->add_option("--log", log_path)->required();
    coverage->add_option("--sections", sections_path)->required();
    coverage->add_option("--now", now_flag, "Query instant (ISO-8601)");
    coverage->add_option("--window-days", window_days, "Recent-survey window")
        ->capture_default_str();
    add_format_flag(coverage, format);
    coverage->callback([&] {
        const auto reg = open_registry();
        const auto cov = reg.coverage(parse_now(now_flag), window_days);
        emit(ctx,
             json{{"pct_with_structure", cov.pct_with_structure},
                  {"pct_with_recent_survey", cov.pct_with_recent_survey},
                  {"window_days", window_days},
                  {"section_count", reg.sections().size()}},
             format);
    });

    // --- report ---------------------------------------------------------------
    CLI::App* report_cmd = app.add_subcommand("report", "Derive headline numbers");
    report_cmd->require_subcommand(1);

    CLI::App* area = report_cmd->add_subcommand("area", "Area table over footprint sets");
    area->add_option("--footprints", export_footprints_in, "Footprints GeoJSON")->required();
    area->add_flag("--paris-reference", paris_reference,
                   "Annotate with the published Paris reference surfaces");
    add_format_flag(area, format);
    area->callback([&] {
        const auto sets = report::load_footprints(export_footprints_in);
        const auto table = report::area_report(sets, paris_reference);
        if (format == "text") {
            ctx.output = report::render_text(table);
            return;
        }
        json rows = json::array();
        for (const auto& row : table.rows) {
            rows.push_back(json{{"label", row.label},
                                {"area_m2", row.area_m2},
                                {"area_km2", row.area_km2},
                                {"set_count", row.set_count}});
        }
        json out{{"rows", std::move(rows)}, {"total_m2", table.total_m2}};
        if (table.paris_reference) {
            out["paris_reference_km2"] =
                json{{"with_dependencies", table.paris_reference->with_dependencies_km2},
                     {"carriageway_only", table.paris_reference->carriageway_only_km2}};
        }
        emit(ctx, out, format);
    });

    CLI::App* cost = report_cmd->add_subcommand("cost", "Cost envelope for covering an area");
    cost->add_option("--area-m2", area_m2, "Area in square meters")->required();
    cost->add_option("--basis", basis_str, "surface_only | structure_only | full")->required();
    cost->add_option("--cost-model", cost_model_path, "Cost model JSON (defaults to Cerema rates)");
    add_format_flag(cost, format);
    cost->callback([&] {
        const auto envelope =
            report::cost_envelope(area_m2, load_model(), report::cost_basis_from_string(basis_str));
        emit(ctx,
             json{{"area_m2", area_m2},
                  {"basis", report::to_string(envelope.basis)},
                  {"min_eur", envelope.min_eur},
                  {"max_eur", envelope.max_eur}},
             format);
    });

    CLI::App* gap = report_cmd->add_subcommand(
        "gap-cost", "Cost of an area-estimation gap (reported as at-least)");
    gap->add_option("--delta-km2", delta_km2, "Gap in square kilometers");
    gap->add_option("--delta-m2", delta_m2, "Gap in square meters");
    gap->add_option("--cost-model", cost_model_path);
    add_format_flag(gap, format);
    gap->callback([&] {
        if (delta_km2 < 0.0 && delta_m2 < 0.0) {
            throw CLI::RequiredError("--delta-km2 or --delta-m2");
        }
        const double delta = delta_m2 >= 0.0 ? delta_m2 : delta_km2 * 1e6;
        const auto envelope = report::gap_cost(delta, load_model());
        emit(ctx,
             json{{"delta_m2", delta},
                  {"basis", report::to_string(envelope.basis)},
                  {"min_eur", envelope.min_eur},
                  {"max_eur", envelope.max_eur},
                  {"note", "the gap costs at least min_eur"}},
             format);
    });

    CLI::App* priority = report_cmd->add_subcommand("priority", "Maintenance priority ranking");
    priority->add_option("--log", log_path)->required();
    priority->add_option("--sections", sections_path)->required();
    priority->add_option("--now", now_flag, "Query instant (ISO-8601)");
    add_format_flag(priority, format);
    priority->callback([&] {
        const auto reg = open_registry();
        const auto entries = report::maintenance_priority(reg, parse_now(now_flag));
        json list = json::array();
        for (const auto& entry : entries) {
            list.push_back(json{{"section_id", entry.section_id}, {"score", entry.score}});
        }
        emit(ctx, json{{"priorities", std::move(list)}}, format);
    });

    // --- export ---------------------------------------------------------------
    CLI::App* export_cmd =
        app.add_subcommand("export", "Re-emit loaded data as normalized GeoJSON");
    export_cmd->add_option("--axes", export_axes_in, "Axes GeoJSON to normalize");
    export_cmd->add_option("--parcels", export_parcels_in, "Parcels GeoJSON to normalize");
    export_cmd->add_option("--boundary", export_boundary_in, "Boundary GeoJSON to normalize");
    export_cmd->add_option("--sections", export_sections_in, "Section table to normalize");
    export_cmd->add_option("-o,--output", out_path, "Output file")->required();
    add_format_flag(export_cmd, format);
    export_cmd->callback([&] {
        const int chosen = (export_axes_in.empty() ? 0 : 1) + (export_parcels_in.empty() ? 0 : 1) +
                           (export_boundary_in.empty() ? 0 : 1) +
                           (export_sections_in.empty() ? 0 : 1);
        if (chosen != 1) {
            throw CLI::ValidationError(
                "export", "exactly one of --axes/--parcels/--boundary/--sections is required");
        }
        std::string what;
        std::size_t count = 0;
        if (!export_axes_in.empty()) {
            const auto axes = io::load_axes(export_axes_in);
            report::export_axes(axes, out_path);
            what = "axes";
            count = axes.size();
        } else if (!export_parcels_in.empty()) {
            const auto parcels = io::load_parcels(export_parcels_in, &ctx.warnings);
            report::export_parcels(parcels, out_path);
            what = "parcels";
            count = parcels.size();
        } else if (!export_boundary_in.empty()) {
            report::export_boundary(io::load_boundary(export_boundary_in), out_path);
            what = "boundary";
            count = 1;
        } else {
            const auto sections = registry::load_sections(export_sections_in);
            registry::save_sections(sections, out_path);
            what = "sections";
            count = sections.size();
        }
        emit(ctx, json{{"exported", what}, {"features", count}, {"path", out_path}}, format);
    });

    // --- dispatch ---------------------------------------------------------------
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        result.output = std::move(ctx.output);
    } catch (const CLI::CallForHelp&) {
        result.output = app.help();
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.diagnostic = std::string("usage error: ") + e.what();
    } catch (const Error& e) {
        result.exit_code = 1;
        result.diagnostic = std::string("error: ") + to_string(e.kind()) + ": " + e.what();
    } catch (const std::exception& e) {
        result.exit_code = 1;
        result.diagnostic = std::string("error: ") + e.what();
    }
    result.warnings = ctx.warnings.messages();
    return result;
}

}  // namespace voirie::cli
