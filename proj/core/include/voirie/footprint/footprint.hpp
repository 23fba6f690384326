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

#ifndef VOIRIE_FOOTPRINT_FOOTPRINT_HPP
#define VOIRIE_FOOTPRINT_FOOTPRINT_HPP

/// @file footprint.hpp
/// The two road-footprint constructions and their combination.
///
/// Route A (centerline): buffer every axis by its attributed width and
/// union the strips.  This estimates the CARRIAGEWAY surface, not the full
/// right-of-way.
///
/// Route B (cadastre): subtract the union of cadastral parcels from the
/// study boundary.  The complement is the PUBLIC SPACE, a good estimate of
/// the full right-of-way (known defects: parkings, green verges).
///
/// Combining the two separates carriageways from dependencies:
///     carriageway = A n B,  dependency = B \ A,  unexplained = A \ B.
/// The unexplained remainder (carriageway claimed outside public space) is
/// kept as a data-quality signal rather than discarded.

#include <span>
#include <string>

#include "voirie/error.hpp"
#include "voirie/geometry/ops.hpp"
#include "voirie/io/loaders.hpp"

namespace voirie::footprint {

enum class Label { carriageway, public_space, dependency, unexplained };
enum class Provenance { centerline, cadastre, combined };

const char* to_string(Label label) noexcept;
const char* to_string(Provenance provenance) noexcept;
Label label_from_string(const std::string& s);
Provenance provenance_from_string(const std::string& s);

/// Inputs a footprint was built from, for reproducibility checks.
struct FootprintParams {
    std::string width_rules_hash;  ///< empty for cadastral footprints
    std::string boundary_label;

    [[nodiscard]] std::string hash() const;
};

struct FootprintSet {
    Label label = Label::carriageway;
    geom::AreaGeometry geometry;
    double area_m2 = 0.0;  ///< always area(geometry)
    Provenance provenance = Provenance::centerline;
    FootprintParams params;
};

/// Width attributed to an axis: measured width when surveyed, else the
/// category rule, else the fallback.  Total by construction.
double assign_width(const io::RoadAxis& axis, const io::WidthRules& rules) noexcept;

/// Union of per-axis buffered strips, clipped to the boundary.  An empty
/// axis list yields an empty carriageway footprint.
FootprintSet build_centerline_footprint(std::span<const io::RoadAxis> axes,
                                        const io::WidthRules& rules,
                                        const io::StudyBoundary& boundary);

/// Boundary minus the union of parcels.  Parcels reaching outside the
/// boundary are clipped with a warning.
FootprintSet build_cadastral_footprint(std::span<const io::CadastralParcel> parcels,
                                       const io::StudyBoundary& boundary,
                                       WarningLog* warnings = nullptr);

struct CombinedFootprints {
    FootprintSet carriageway;  ///< a n b
    FootprintSet dependency;   ///< b \ a
    FootprintSet unexplained;  ///< a \ b, data-quality signal
};

/// @throws Error{inconsistent_inputs} when labels/provenances are not the
///         carriageway/public-space pair or boundary labels differ.
CombinedFootprints combine_footprints(const FootprintSet& carriageway,
                                      const FootprintSet& public_space);

struct ComparisonMetrics {
    double area_a_m2 = 0.0;
    double area_b_m2 = 0.0;
    double area_intersection_m2 = 0.0;
    double area_a_minus_b_m2 = 0.0;
    double area_b_minus_a_m2 = 0.0;
    double iou = 0.0;  ///< intersection over union; 0 when both empty
};

/// Overlap metrics between the two constructions.  The conservation
/// identities area(a) = inter + (a\b) and area(b) = inter + (b\a) hold to
/// 1e-6 relative.
ComparisonMetrics compare_footprints(const FootprintSet& a, const FootprintSet& b);

}  // namespace voirie::footprint

#endif  // VOIRIE_FOOTPRINT_FOOTPRINT_HPP
