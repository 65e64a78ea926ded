//------------------------------------------------------------------------------
//
//   Copyright 2026 The nonext Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nonext {

enum ExitCode : int
{
  kExitSuccess      = 0,
  kExitUsage        = 1,
  kExitInput        = 2,
  kExitVerification = 3,
  kExitOptimizer    = 4,
};

enum class Command
{
  kEntropy,
  kDivergence,
  kSweep,
  kVerify,
  kMinimize,
};

enum class OutputFormat
{
  kCsv,
  kStructured,
};

struct RunConfig
{
  Command                  command = Command::kEntropy;
  std::vector<std::string> inputs;
  std::optional<double>    q;
  std::vector<double>      q_grid;   ///< resolved from --q / --q-grid, or the default
  std::vector<double>      weights;  ///< empty means the command default
  std::vector<std::string> measures; ///< empty means the command default
  OutputFormat             format      = OutputFormat::kCsv;
  std::uint64_t            seed        = 1;
  std::size_t              trials      = 1000;
  bool                     sort_labels = false;
  std::string              only;
  double                   tolerance = 1e-12;
};

/// q values used by entropy, divergence and sweep when neither --q nor
/// --q-grid is given.
std::vector<double> default_q_grid();

/// Expands "a:b:step" to a, a + step, ..., up to b. Each value is computed
/// as a + k*step. Returns an empty grid when a > b. Throws ArgumentError for
/// malformed text, a non-positive step or a negative start.
std::vector<double> parse_q_grid(std::string_view text);

/// Parses a comma-separated list of numbers. Throws ArgumentError.
std::vector<double> parse_number_list(std::string_view text);

/// Runs `nonext <args...>` (program name excluded) and returns the exit code.
int run_cli(std::span<std::string const> args, std::ostream &out, std::ostream &err);

}  // namespace nonext
