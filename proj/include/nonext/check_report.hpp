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

#include "json.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>

namespace nonext {

/// Outcome of a sampled numerical check.
///
/// `worst_violation` is the largest value of (lhs - rhs) seen for an
/// inequality lhs <= rhs, or of |lhs - rhs| for an identity; it can be
/// negative when every sample had slack. The check passes iff
/// worst_violation <= tolerance. `witness` is a text rendering of the input
/// that produced the worst value, enough to replay it.
struct CheckReport
{
  std::string   name;
  std::size_t   samples         = 0;
  double        worst_violation = -std::numeric_limits<double>::infinity();
  std::string   witness;
  double        tolerance = 0.0;
  std::uint64_t seed      = 0;
  /// Free-form remark, e.g. a violated precondition.
  std::string note;

  bool passed() const noexcept
  {
    return worst_violation <= tolerance;
  }
  char const *verdict() const noexcept
  {
    return passed() ? "pass" : "fail";
  }

  /// Counts one sample; keeps it as the witness when it is the worst so far.
  /// `describe` is only invoked for a new worst.
  template <typename Describe>
  void record(double violation, Describe &&describe)
  {
    ++samples;
    if (violation > worst_violation || std::isnan(violation))
    {
      worst_violation = std::isnan(violation) ? std::numeric_limits<double>::infinity() : violation;
      witness         = describe();
    }
  }
};

/// `name=... verdict=... worst_violation=... tolerance=... samples=... seed=... witness="..."`
std::string to_line(CheckReport const &report);
nlohmann::json to_json(CheckReport const &report);

/// 17 significant digits; `inf`, `-inf`, `nan` for non-finite values.
std::string format_exact(double value);
/// 12 significant digits; `inf`, `-inf`, `nan` for non-finite values.
std::string format_value(double value);
/// "(v0, v1, ...)" with format_exact entries.
std::string format_vector(std::span<double const> values);

}  // namespace nonext
