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

#include "nonext/measures.hpp"

#include "nonext/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace nonext {
namespace {

void require_nonnegative(std::span<double const> entries, char const *what)
{
  for (std::size_t i = 0; i < entries.size(); ++i)
  {
    if (!(entries[i] >= 0.0) || !std::isfinite(entries[i]))
    {
      throw ArgumentError(std::string(what) + ": entry " + std::to_string(i) +
                          " is negative or not finite");
    }
  }
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> entries)
  : entries_(std::move(entries))
{
  if (entries_.empty())
  {
    throw ArgumentError("ProbabilityVector: empty support");
  }
  require_nonnegative(entries_, "ProbabilityVector");
  double const sum = std::accumulate(entries_.begin(), entries_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance)
  {
    throw ArgumentError("ProbabilityVector: entries sum to " + std::to_string(sum));
  }
  if (sum != 1.0)
  {
    for (double &v : entries_)
    {
      v /= sum;
    }
  }
}

ProbabilityVector ProbabilityVector::normalized(std::span<double const> masses)
{
  if (masses.empty())
  {
    throw ArgumentError("ProbabilityVector: empty support");
  }
  require_nonnegative(masses, "ProbabilityVector");
  double const total = std::accumulate(masses.begin(), masses.end(), 0.0);
  if (!(total > 0.0))
  {
    throw ArgumentError("ProbabilityVector: total mass is zero");
  }
  std::vector<double> out(masses.begin(), masses.end());
  for (double &v : out)
  {
    v /= total;
  }
  return ProbabilityVector(std::move(out));
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n)
{
  if (n == 0)
  {
    throw ArgumentError("ProbabilityVector: empty support");
  }
  return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

ProbabilityVector ProbabilityVector::degenerate(std::size_t n, std::size_t index)
{
  if (index >= n)
  {
    throw ArgumentError("ProbabilityVector::degenerate: index out of range");
  }
  std::vector<double> out(n, 0.0);
  out[index] = 1.0;
  return ProbabilityVector(Trusted{}, std::move(out));
}

std::size_t ProbabilityVector::support_size() const noexcept
{
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](double v) { return v > 0.0; }));
}

UnnormalizedMeasure::UnnormalizedMeasure(std::vector<double> entries)
  : entries_(std::move(entries))
{
  require_nonnegative(entries_, "UnnormalizedMeasure");
}

double UnnormalizedMeasure::total() const noexcept
{
  return std::accumulate(entries_.begin(), entries_.end(), 0.0);
}

JointDistribution::JointDistribution(ProbabilityVector prior, std::vector<ProbabilityVector> conditionals)
  : prior_(std::move(prior))
  , conditionals_(std::move(conditionals))
{
  if (conditionals_.size() != prior_.size())
  {
    throw ArgumentError("JointDistribution: prior has " + std::to_string(prior_.size()) + " outcomes but " +
                        std::to_string(conditionals_.size()) + " conditional rows were given");
  }
  for (auto const &row : conditionals_)
  {
    if (row.size() != conditionals_.front().size())
    {
      throw ArgumentError("JointDistribution: conditional rows differ in support size");
    }
  }
}

ProbabilityVector JointDistribution::table() const
{
  std::vector<double> out;
  out.reserve(rows() * cols());
  for (std::size_t y = 0; y < rows(); ++y)
  {
    for (std::size_t x = 0; x < cols(); ++x)
    {
      out.push_back(cell(y, x));
    }
  }
  return ProbabilityVector(std::move(out));
}

ProbabilityVector JointDistribution::marginal_x() const
{
  return mixture(prior_, conditionals_);
}

JointDistribution JointDistribution::swapped() const
{
  ProbabilityVector              px = marginal_x();
  std::vector<ProbabilityVector> rows_y_given_x;
  rows_y_given_x.reserve(cols());
  for (std::size_t x = 0; x < cols(); ++x)
  {
    if (px[x] > 0.0)
    {
      std::vector<double> column(rows());
      for (std::size_t y = 0; y < rows(); ++y)
      {
        column[y] = cell(y, x);
      }
      rows_y_given_x.push_back(ProbabilityVector::normalized(column));
    }
    else
    {
      rows_y_given_x.push_back(ProbabilityVector::uniform(rows()));
    }
  }
  return JointDistribution(std::move(px), std::move(rows_y_given_x));
}

namespace {

template <typename Measure>
std::vector<double> weighted_sum(ProbabilityVector const &weights, std::span<Measure const> items)
{
  if (items.size() != weights.size())
  {
    throw ArgumentError("mixture: " + std::to_string(weights.size()) + " weights for " +
                        std::to_string(items.size()) + " components");
  }
  std::size_t const n = items.front().size();
  std::vector<double> out(n, 0.0);
  for (std::size_t j = 0; j < items.size(); ++j)
  {
    if (items[j].size() != n)
    {
      throw ArgumentError("mixture: components differ in support size");
    }
    double const w = weights[j];
    for (std::size_t i = 0; i < n; ++i)
    {
      out[i] += w * items[j][i];
    }
  }
  return out;
}

}  // namespace

ProbabilityVector mixture(ProbabilityVector const &weights, std::span<ProbabilityVector const> dists)
{
  return ProbabilityVector(weighted_sum(weights, dists));
}

UnnormalizedMeasure mixture(ProbabilityVector const &weights, std::span<UnnormalizedMeasure const> measures)
{
  return UnnormalizedMeasure(weighted_sum(weights, measures));
}

ProbabilityVector product(ProbabilityVector const &p, ProbabilityVector const &r)
{
  std::vector<double> out;
  out.reserve(p.size() * r.size());
  for (double a : p)
  {
    for (double b : r)
    {
      out.push_back(a * b);
    }
  }
  return ProbabilityVector(std::move(out));
}

JointDistribution joint_from_conditional(ProbabilityVector prior, std::vector<ProbabilityVector> conditionals)
{
  return JointDistribution(std::move(prior), std::move(conditionals));
}

}  // namespace nonext
