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

#include "nonext/measures.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace nonext {

enum class LabelOrder
{
  kFirstSeen,
  kLexicographic,
};

/// Labelled counts read from a `label,count` text file.
struct Histogram
{
  std::vector<std::string> labels;
  UnnormalizedMeasure      counts{std::vector<double>{}};
};

/// Parses `label,count` records. `#` starts a comment line, blank lines are
/// skipped, surrounding whitespace is trimmed, and the count is taken after
/// the last comma so labels may themselves contain commas. Repeated labels
/// accumulate. Throws ParseError (with the 1-based line) for malformed rows
/// and negative or non-finite counts.
Histogram ingest_histogram(std::istream &source, LabelOrder order = LabelOrder::kFirstSeen);

/// As ingest_histogram, but errors name the file: "<path>: line N: ...".
Histogram read_histogram_file(std::filesystem::path const &path, LabelOrder order = LabelOrder::kFirstSeen);

/// Union of all labels, in first-seen order across the inputs or sorted.
std::vector<std::string> union_labels(std::span<Histogram const> histograms, LabelOrder order);

/// Counts of `h` re-indexed onto `labels`; missing labels get count 0.
UnnormalizedMeasure align_to(Histogram const &h, std::span<std::string const> labels);

}  // namespace nonext
