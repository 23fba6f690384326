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

#include "voirie/registry/time.hpp"

#include <cctype>
#include <cstdio>
#include <ctime>

#include "voirie/error.hpp"

namespace voirie::registry {

namespace {

// Civil <-> day-count conversions (proleptic Gregorian, days since
// 1970-01-01).
std::int64_t days_from_civil(int y, int m, int d) noexcept {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) noexcept {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

bool is_leap(int y) noexcept {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) noexcept {
    static constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return lengths[m - 1];
}

[[noreturn]] void bad(const std::string& input, const char* why) {
    throw Error(ErrorKind::validation, "bad timestamp \"" + input + "\": " + why);
}

int read_digits(const std::string& s, std::size_t pos, std::size_t count, const std::string& input) {
    int value = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (pos + i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos + i]))) {
            bad(input, "expected digits");
        }
        value = value * 10 + (s[pos + i] - '0');
    }
    return value;
}

}  // namespace

Timestamp Timestamp::parse(const std::string& iso8601) {
    const std::string& s = iso8601;
    if (s.size() < 10) bad(s, "too short for YYYY-MM-DD");
    const int year = read_digits(s, 0, 4, s);
    if (s[4] != '-') bad(s, "expected '-' after year");
    const int month = read_digits(s, 5, 2, s);
    if (s[7] != '-') bad(s, "expected '-' after month");
    const int day = read_digits(s, 8, 2, s);
    if (month < 1 || month > 12) bad(s, "month out of range");
    if (day < 1 || day > days_in_month(year, month)) bad(s, "day out of range");

    int hour = 0, minute = 0, second = 0;
    std::size_t pos = 10;
    if (pos < s.size()) {
        if (s[pos] != 'T' && s[pos] != ' ') bad(s, "expected 'T' before time");
        ++pos;
        hour = read_digits(s, pos, 2, s);
        if (pos + 2 >= s.size() || s[pos + 2] != ':') bad(s, "expected ':' after hour");
        minute = read_digits(s, pos + 3, 2, s);
        pos += 5;
        if (pos < s.size() && s[pos] == ':') {
            second = read_digits(s, pos + 1, 2, s);
            pos += 3;
        }
        if (pos < s.size() && s[pos] == '.') {
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        if (pos < s.size()) {
            if (s[pos] != 'Z') bad(s, "only 'Z' or zone-less instants are accepted");
            ++pos;
        }
        if (pos != s.size()) bad(s, "trailing characters");
        if (hour > 23 || minute > 59 || second > 59) bad(s, "time of day out of range");
    }

    Timestamp t;
    t.seconds_ = days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second;
    return t;
}

Timestamp Timestamp::from_unix_seconds(std::int64_t seconds) {
    Timestamp t;
    t.seconds_ = seconds;
    return t;
}

Timestamp Timestamp::now() {
    return from_unix_seconds(static_cast<std::int64_t>(std::time(nullptr)));
}

std::string Timestamp::to_iso8601() const {
    std::int64_t days = seconds_ / 86400;
    std::int64_t rem = seconds_ % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y = 0, m = 0, d = 0;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02lld:%02lld:%02lldZ", y, m, d,
                  static_cast<long long>(rem / 3600), static_cast<long long>((rem / 60) % 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

double days_between(Timestamp from, Timestamp to) noexcept {
    return static_cast<double>(to.unix_seconds() - from.unix_seconds()) / 86400.0;
}

}  // namespace voirie::registry
