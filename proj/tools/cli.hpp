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

#ifndef VOIRIE_CLI_HPP
#define VOIRIE_CLI_HPP

/// Command-line front end wiring ingestion -> footprint -> registry ->
/// reporting for batch use and scripting.
///
/// Contract: data goes to stdout (or -o files), every diagnostic to
/// stderr; exit 0 on success, 1 on domain errors, 2 on usage errors.
/// Warnings never change the exit code.  Identical inputs produce
/// byte-identical outputs; commands that need the current time take it
/// from --now so runs stay reproducible.

#include <string>
#include <vector>

namespace voirie::cli {

struct CommandResult {
    int exit_code = 0;
    std::string output;                 ///< stdout payload (text or JSON)
    std::vector<std::string> warnings;  ///< stderr, non-fatal
    std::string diagnostic;             ///< stderr, fatal description
};

/// Runs one subcommand; never throws.
CommandResult run(const std::vector<std::string>& args);

}  // namespace voirie::cli

#endif  // VOIRIE_CLI_HPP
