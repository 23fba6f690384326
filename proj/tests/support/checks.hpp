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

#ifndef VOIRIE_TESTS_CHECKS_HPP
#define VOIRIE_TESTS_CHECKS_HPP

#include <cmath>

#include "doctest.h"
#include "voirie/error.hpp"

// Asserts that an expression throws voirie::Error with the given kind.
#define CHECK_THROWS_KIND(expr, expected_kind)                     \
    do {                                                           \
        bool caught_ = false;                                      \
        try {                                                      \
            (void)(expr);                                          \
        } catch (const voirie::Error& e_) {                        \
            caught_ = true;                                        \
            CHECK_MESSAGE(e_.kind() == (expected_kind), e_.what()); \
        }                                                          \
        CHECK_MESSAGE(caught_, #expr " did not throw");            \
    } while (0)

namespace testsupport {

inline bool near_rel(double actual, double expected, double rel_tol) {
    if (expected == 0.0) return std::abs(actual) <= rel_tol;
    return std::abs(actual - expected) <= rel_tol * std::abs(expected);
}

}  // namespace testsupport

#endif  // VOIRIE_TESTS_CHECKS_HPP
