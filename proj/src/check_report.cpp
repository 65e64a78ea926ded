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

#include "nonext/check_report.hpp"

#include <cmath>
#include <cstdio>

namespace nonext {
namespace {

std::string format_with(double value, int digits)
{
  if (std::isnan(value))
  {
    return "nan";
  }
  if (std::isinf(value))
  {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

}  // namespace

std::string format_exact(double value)
{
  return format_with(value, 17);
}

std::string format_value(double value)
{
  return format_with(value == 0.0 ? 0.0 : value, 12);
}

std::string format_vector(std::span<double const> values)
{
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i)
  {
    if (i > 0)
    {
      out += ", ";
    }
    out += format_exact(values[i]);
  }
  out += ")";
  return out;
}

std::string to_line(CheckReport const &report)
{
  std::string line = "name=" + report.name;
  line += " verdict=";
  line += report.verdict();
  line += " worst_violation=" + format_value(report.worst_violation);
  line += " tolerance=" + format_value(report.tolerance);
  line += " samples=" + std::to_string(report.samples);
  line += " seed=" + std::to_string(report.seed);
  line += " witness=\"" + report.witness + "\"";
  if (!report.note.empty())
  {
    line += " note=\"" + report.note + "\"";
  }
  return line;
}

nlohmann::json to_json(CheckReport const &report)
{
  nlohmann::json j;
  j["name"]    = report.name;
  j["verdict"] = report.verdict();
  // JSON has no infinities; keep the textual form for non-finite values.
  if (std::isfinite(report.worst_violation))
  {
    j["worst_violation"] = report.worst_violation;
  }
  else
  {
    j["worst_violation"] = format_value(report.worst_violation);
  }
  j["tolerance"] = report.tolerance;
  j["samples"]   = report.samples;
  j["seed"]      = report.seed;
  j["witness"]   = report.witness;
  if (!report.note.empty())
  {
    j["note"] = report.note;
  }
  return j;
}

}  // namespace nonext
