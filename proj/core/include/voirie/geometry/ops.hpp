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

#ifndef VOIRIE_GEOMETRY_OPS_HPP
#define VOIRIE_GEOMETRY_OPS_HPP

/// @file ops.hpp
/// Planar geometry operations: areas, buffering, boolean set operations,
/// and linear referencing.  All operations are pure functions of their
/// inputs and safe to call concurrently.
///
/// Buffering convention (normative for this library): END CAPS ARE FLAT
/// (butt) and joins are mitered, so buffering a straight segment of length
/// L by total width w yields exactly the L x w rectangle.  Miters are
/// truncated at 5x the half-width for very sharp angles.

#include <span>
#include <string>

#include "voirie/geometry/types.hpp"

namespace voirie::geom {

enum class BooleanMode {
    difference,
    intersection,
};

/// Surface of a valid geometry in square meters.  Additive over disjoint
/// parts; 0 for the empty geometry.
/// @throws Error{invalid_geometry} when g violates the validity invariants.
double area(const AreaGeometry& g);

/// Sum of segment lengths in meters.  Positive by the Polyline invariants.
double length(const Polyline& line) noexcept;

/// Region of points within total_width/2 of the line, flat end caps.
/// @throws Error{invalid_parameter} when total_width <= 0.
AreaGeometry buffer_polyline(const Polyline& line, double total_width_m);

/// Union of all inputs.  The empty span yields the empty geometry.
/// @throws Error{invalid_geometry} on any invalid input.
AreaGeometry union_all(std::span<const AreaGeometry> geometries);

/// Set difference or intersection of two valid geometries.
/// @throws Error{invalid_geometry} on invalid input.
AreaGeometry boolean_op(const AreaGeometry& a, const AreaGeometry& b, BooleanMode mode);

/// Piece of `line` between arc-length positions m_start and m_end
/// (meters from the start vertex).  The result's length equals
/// m_end - m_start to 1e-6 relative.
/// @throws Error{out_of_range} unless 0 <= m_start < m_end <= length(line)
///         (a hair of floating slack is tolerated at the ends).
Polyline substring_along(const Polyline& line, double m_start, double m_end);

/// Repairs a dirty geometry to one satisfying the AreaGeometry invariants
/// covering the same point set as the input's well-defined interior
/// (even-odd rule).  Already-valid input comes back unchanged.
/// @throws Error{repair_failed} when nothing with a real interior remains:
///         empty ring list, or zero-area degenerate input.
AreaGeometry make_valid(const AreaGeometry& g);

/// True when g satisfies the AreaGeometry invariants (empty is valid).
bool is_valid(const AreaGeometry& g);

/// Validity check with a human-readable reason for diagnostics.
bool is_valid(const AreaGeometry& g, std::string& reason);

/// True when the polyline touches or crosses the region.
bool intersects(const Polyline& line, const AreaGeometry& g);

}  // namespace voirie::geom

#endif  // VOIRIE_GEOMETRY_OPS_HPP
