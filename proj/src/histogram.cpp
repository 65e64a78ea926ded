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

#include "nonext/histogram.hpp"

#include "nonext/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <string_view>
#include <unordered_map>

namespace nonext {
namespace {

std::string_view trim(std::string_view s)
{
  auto const first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
  {
    return {};
  }
  auto const last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_count(std::string_view text, std::size_t line)
{
  if (!text.empty() && text.front() == '+')
  {
    text.remove_prefix(1);
  }
  double value = 0.0;
  auto const [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
  {
    throw ParseError::at_line("count '" + std::string(text) + "' is not a number", line);
  }
  if (!std::isfinite(value))
  {
    throw ParseError::at_line("count must be finite", line);
  }
  if (value < 0.0)
  {
    throw ParseError::at_line("negative count " + std::string(text), line);
  }
  return value;
}

}  // namespace

Histogram ingest_histogram(std::istream &source, LabelOrder order)
{
  std::vector<std::string>                     labels;
  std::vector<double>                          counts;
  std::unordered_map<std::string, std::size_t> index;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(source, raw))
  {
    ++line;
    std::string_view const text = trim(raw);
    if (text.empty() || text.front() == '#')
    {
      continue;
    }
    auto const comma = text.rfind(',');
    if (comma == std::string_view::npos)
    {
      throw ParseError::at_line("expected 'label,count'", line);
    }
    std::string_view const label = trim(text.substr(0, comma));
    if (label.empty())
    {
      throw ParseError::at_line("empty label", line);
    }
    double const count = parse_count(trim(text.substr(comma + 1)), line);

    auto const [it, inserted] = index.try_emplace(std::string(label), labels.size());
    if (inserted)
    {
      labels.emplace_back(label);
      counts.push_back(count);
    }
    else
    {
      counts[it->second] += count;
    }
  }

  if (order == LabelOrder::kLexicographic)
  {
    std::vector<std::size_t> perm(labels.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
    std::vector<std::string> sorted_labels;
    std::vector<double>      sorted_counts;
    for (std::size_t i : perm)
    {
      sorted_labels.push_back(std::move(labels[i]));
      sorted_counts.push_back(counts[i]);
    }
    labels = std::move(sorted_labels);
    counts = std::move(sorted_counts);
  }

  return Histogram{std::move(labels), UnnormalizedMeasure(std::move(counts))};
}

Histogram read_histogram_file(std::filesystem::path const &path, LabelOrder order)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ParseError(path.string() + ": cannot open file");
  }
  try
  {
    return ingest_histogram(in, order);
  }
  catch (ParseError const &e)
  {
    throw ParseError(path.string() + ": " + e.what(), e.line());
  }
}

std::vector<std::string> union_labels(std::span<Histogram const> histograms, LabelOrder order)
{
  std::vector<std::string>                     out;
  std::unordered_map<std::string, std::size_t> seen;
  for (auto const &h : histograms)
  {
    for (auto const &label : h.labels)
    {
      if (seen.try_emplace(label, out.size()).second)
      {
        out.push_back(label);
      }
    }
  }
  if (order == LabelOrder::kLexicographic)
  {
    std::sort(out.begin(), out.end());
  }
  return out;
}

UnnormalizedMeasure align_to(Histogram const &h, std::span<std::string const> labels)
{
  std::unordered_map<std::string_view, std::size_t> position;
  for (std::size_t i = 0; i < labels.size(); ++i)
  {
    position.emplace(labels[i], i);
  }
  std::vector<double> out(labels.size(), 0.0);
  for (std::size_t i = 0; i < h.labels.size(); ++i)
  {
    auto const it = position.find(h.labels[i]);
    if (it == position.end())
    {
      throw ArgumentError("align_to: label '" + h.labels[i] + "' missing from the target label set");
    }
    out[it->second] += h.counts[i];
  }
  return UnnormalizedMeasure(std::move(out));
}

}  // namespace nonext
