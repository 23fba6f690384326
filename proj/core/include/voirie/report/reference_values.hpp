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

#ifndef VOIRIE_REPORT_REFERENCE_VALUES_HPP
#define VOIRIE_REPORT_REFERENCE_VALUES_HPP

/// @file reference_values.hpp
/// Published reference figures used to annotate reports.  These are
/// documented constants, never computed results.

namespace voirie::report {

/// Paris road surface including dependencies (sidewalks etc.), as
/// published by the city (Ville de Paris 2020; Merlin 1985).
inline constexpr double paris_with_dependencies_km2 = 28.0;

/// Paris road surface counting carriageways only (CERTU 2013).
inline constexpr double paris_carriageway_only_km2 = 15.0;

/// Default intervention cost rates in euros per square meter
/// (Cerema Ouest 2017, "Analyse Bretagne-Pays de la Loire"); rates are
/// regional, so reports accept an override file.
inline constexpr double default_surface_min_eur_m2 = 6.0;     ///< visible course, low
inline constexpr double default_surface_max_eur_m2 = 50.0;    ///< visible course, high
inline constexpr double default_structure_min_eur_m2 = 240.0; ///< non-visible part, low
inline constexpr double default_structure_max_eur_m2 = 520.0; ///< non-visible part, high

}  // namespace voirie::report

#endif  // VOIRIE_REPORT_REFERENCE_VALUES_HPP
