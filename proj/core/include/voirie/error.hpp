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

#ifndef VOIRIE_ERROR_HPP
#define VOIRIE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace voirie {

/// Failure categories surfaced by the library.  Every thrown error carries
/// one of these so callers (and tests) can react to the class of failure
/// without parsing messages.
enum class ErrorKind {
    invalid_geometry,    ///< geometry violates validity invariants
    repair_failed,       ///< geometry cannot be repaired (e.g. zero-area degenerate)
    invalid_parameter,   ///< out-of-domain argument (non-positive width, ...)
    out_of_range,        ///< linear-referencing range outside [0, length]
    invalid_shape,       ///< polyline with fewer than 2 distinct vertices
    schema,              ///< input file does not match the expected schema
    duplicate_id,        ///< duplicate identifier within one dataset
    cardinality,         ///< wrong number of features (boundary files)
    crs,                 ///< coordinates look geographic, not projected meters
    structure,           ///< malformed lexicon tree (cycle, bad parent, empty)
    rank,                ///< lexicon rank inconsistent with parent rank
    unknown_term,        ///< lexicon lookup of an unknown word
    unknown_reference,   ///< reference to a section/axis that does not exist
    inconsistent_inputs, ///< inputs that must agree (boundary labels) differ
    validation,          ///< record payload violates a field invariant
    io,                  ///< file system failure
    usage,               ///< command line usage error
};

constexpr const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_geometry: return "invalid_geometry";
        case ErrorKind::repair_failed: return "repair_failed";
        case ErrorKind::invalid_parameter: return "invalid_parameter";
        case ErrorKind::out_of_range: return "out_of_range";
        case ErrorKind::invalid_shape: return "invalid_shape";
        case ErrorKind::schema: return "schema";
        case ErrorKind::duplicate_id: return "duplicate_id";
        case ErrorKind::cardinality: return "cardinality";
        case ErrorKind::crs: return "crs";
        case ErrorKind::structure: return "structure";
        case ErrorKind::rank: return "rank";
        case ErrorKind::unknown_term: return "unknown_term";
        case ErrorKind::unknown_reference: return "unknown_reference";
        case ErrorKind::inconsistent_inputs: return "inconsistent_inputs";
        case ErrorKind::validation: return "validation";
        case ErrorKind::io: return "io";
        case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Collects non-fatal diagnostics (auto-repairs, clipped parcels, late log
/// entries).  Warnings never change a function's result or exit code.
class WarningLog {
public:
    void add(std::string message) { messages_.push_back(std::move(message)); }
    [[nodiscard]] const std::vector<std::string>& messages() const noexcept { return messages_; }
    [[nodiscard]] bool empty() const noexcept { return messages_.empty(); }

private:
    std::vector<std::string> messages_;
};

/// Convenience for optional warning sinks.
inline void warn(WarningLog* log, std::string message) {
    if (log != nullptr) log->add(std::move(message));
}

}  // namespace voirie

#endif  // VOIRIE_ERROR_HPP
