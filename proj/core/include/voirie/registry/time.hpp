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

#ifndef VOIRIE_REGISTRY_TIME_HPP
#define VOIRIE_REGISTRY_TIME_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace voirie::registry {

/// UTC instant with second precision.
///
/// Accepted ISO-8601 forms: "YYYY-MM-DD", "YYYY-MM-DDTHH:MM:SS" and the
/// same with a trailing "Z" or fractional seconds (truncated).  Instants
/// without a zone designator are read as UTC.  Canonical output is
/// "YYYY-MM-DDTHH:MM:SSZ".
class Timestamp {
public:
    Timestamp() = default;

    /// @throws Error{validation} on malformed input or impossible dates.
    static Timestamp parse(const std::string& iso8601);
    static Timestamp from_unix_seconds(std::int64_t seconds);
    static Timestamp now();

    [[nodiscard]] std::int64_t unix_seconds() const noexcept { return seconds_; }
    [[nodiscard]] std::string to_iso8601() const;

    friend auto operator<=>(const Timestamp&, const Timestamp&) = default;

private:
    std::int64_t seconds_ = 0;
};

/// Elapsed time in fractional days (may be negative).
double days_between(Timestamp from, Timestamp to) noexcept;

}  // namespace voirie::registry

#endif  // VOIRIE_REGISTRY_TIME_HPP
