// Copyright 2026 The clonekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace clonekit::cli {

enum class Command { fidelity_table, clone, qkd_sweep, cv_network, verify };

std::optional<Command> parse_command(std::string_view name);
std::string command_name(Command c);

/// A command plus its raw string parameters. Parameters are validated by run().
struct RunConfig {
  Command command = Command::verify;
  std::map<std::string, std::string> parameters;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

/// Runs one command, writing the table to `out` (or to parameters["output"]),
/// diagnostics to `err`. Returns kExitOk, kExitUsage or kExitVerification.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Worker count: hardware concurrency, capped by CLONEKIT_THREADS when set.
unsigned worker_count();

}  // namespace clonekit::cli
