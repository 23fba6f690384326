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

// Microbenchmarks over synthetic street grids: an n x n grid of blocks
// separated by 12 m streets, axes down the street centers (the scaled-up
// version of the test fixture).

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "voirie/footprint/footprint.hpp"
#include "voirie/geometry/ops.hpp"
#include "voirie/registry/registry.hpp"

namespace {

using namespace voirie;

struct GridCase {
    io::StudyBoundary boundary;
    std::vector<io::CadastralParcel> parcels;
    std::vector<io::RoadAxis> axes;
    io::WidthRules rules;
};

geom::AreaGeometry box(double x0, double y0, double x1, double y1) {
    geom::AreaGeometry g;
    g.polygons.push_back({geom::Ring{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}, {x0, y0}}, {}});
    return g;
}

GridCase make_grid(int blocks) {
    constexpr double street = 12.0;
    constexpr double block = 80.0;
    const double extent = street + blocks * (block + street);

    GridCase grid;
    grid.boundary = io::StudyBoundary{box(0, 0, extent, extent), "bench"};
    for (int by = 0; by < blocks; ++by) {
        for (int bx = 0; bx < blocks; ++bx) {
            const double x = street + bx * (block + street);
            const double y = street + by * (block + street);
            grid.parcels.push_back(io::CadastralParcel{
                "P" + std::to_string(by * blocks + bx), box(x, y, x + block, y + block)});
        }
    }
    for (int i = 0; i <= blocks; ++i) {
        const double c = street / 2.0 + i * (block + street);
        grid.axes.push_back(io::RoadAxis{
            "V" + std::to_string(i), geom::Polyline({{c, 0.0}, {c, extent}}), "voie_auto", {}, {}});
        grid.axes.push_back(io::RoadAxis{
            "H" + std::to_string(i), geom::Polyline({{0.0, c}, {extent, c}}), "voie_auto", {}, {}});
    }
    grid.rules.width_by_category["voie_auto"] = 7.0;
    grid.rules.fallback_width_m = 3.5;
    return grid;
}

void BM_CenterlineFootprint(benchmark::State& state) {
    const GridCase grid = make_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto set = footprint::build_centerline_footprint(grid.axes, grid.rules, grid.boundary);
        benchmark::DoNotOptimize(set.area_m2);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CenterlineFootprint)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_CadastralFootprint(benchmark::State& state) {
    const GridCase grid = make_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto set = footprint::build_cadastral_footprint(grid.parcels, grid.boundary);
        benchmark::DoNotOptimize(set.area_m2);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CadastralFootprint)->RangeMultiplier(2)->Range(4, 32)->Complexity();

void BM_CombineFootprints(benchmark::State& state) {
    const GridCase grid = make_grid(static_cast<int>(state.range(0)));
    const auto a = footprint::build_centerline_footprint(grid.axes, grid.rules, grid.boundary);
    const auto b = footprint::build_cadastral_footprint(grid.parcels, grid.boundary);
    for (auto _ : state) {
        auto combined = footprint::combine_footprints(a, b);
        benchmark::DoNotOptimize(combined.dependency.area_m2);
    }
}
BENCHMARK(BM_CombineFootprints)->Arg(8)->Arg(16);

void BM_MakeValidBowTie(benchmark::State& state) {
    geom::AreaGeometry bowtie;
    bowtie.polygons.push_back(
        {geom::Ring{{0, 0}, {40, 40}, {40, 0}, {0, 40}, {0, 0}}, {}});
    for (auto _ : state) {
        auto repaired = geom::make_valid(bowtie);
        benchmark::DoNotOptimize(repaired.polygons.size());
    }
}
BENCHMARK(BM_MakeValidBowTie);

void BM_BuildSections(benchmark::State& state) {
    const GridCase grid = make_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto sections = registry::build_sections(grid.axes, 10.0);
        benchmark::DoNotOptimize(sections.size());
    }
}
BENCHMARK(BM_BuildSections)->Arg(8)->Arg(32);

void BM_StateAtReplay(benchmark::State& state) {
    const GridCase grid = make_grid(8);
    registry::Registry reg(registry::build_sections(grid.axes, 10.0));
    std::mt19937 rng(99);
    const auto base = registry::Timestamp::parse("2022-01-01");
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
        registry::DegradationObservation deg;
        deg.section_id = reg.sections()[rng() % reg.sections().size()].id;
        deg.kind = registry::DegradationKind::crack;
        deg.severity = 1 + static_cast<int>(rng() % 3);
        deg.observed_at = registry::Timestamp::from_unix_seconds(
            base.unix_seconds() + static_cast<std::int64_t>(rng() % 100000000));
        reg.record(registry::EventType::degradation, deg, deg.observed_at);
    }
    const auto query_time = registry::Timestamp::parse("2026-01-01");
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& section = reg.sections()[i++ % reg.sections().size()];
        auto snapshot = reg.state_at(section.id, query_time);
        benchmark::DoNotOptimize(snapshot.open_degradations.size());
    }
}
BENCHMARK(BM_StateAtReplay)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
