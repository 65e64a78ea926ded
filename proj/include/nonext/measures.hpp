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

#include <cstddef>
#include <span>
#include <vector>

namespace nonext {

/// A point on the probability simplex.
///
/// Entries are nonnegative and must sum to one within kSumTolerance; the
/// stored entries are divided by their sum so they are normalized in working
/// precision. A vector that already sums to exactly 1.0 is stored unchanged,
/// which keeps degenerate and dyadic distributions bit-exact.
class ProbabilityVector
{
public:
  static constexpr double kSumTolerance = 1e-9;

  explicit ProbabilityVector(std::vector<double> entries);

  /// Normalizes arbitrary nonnegative masses (e.g. histogram counts).
  /// Throws ArgumentError when the total mass is zero.
  static ProbabilityVector normalized(std::span<double const> masses);
  static ProbabilityVector uniform(std::size_t n);
  /// Vertex of the simplex: 1.0 at `index`, exact zeros elsewhere.
  static ProbabilityVector degenerate(std::size_t n, std::size_t index);

  std::span<double const> values() const noexcept
  {
    return entries_;
  }
  operator std::span<double const>() const noexcept
  {
    return entries_;
  }
  std::size_t size() const noexcept
  {
    return entries_.size();
  }
  double operator[](std::size_t i) const
  {
    return entries_[i];
  }
  auto begin() const noexcept
  {
    return entries_.begin();
  }
  auto end() const noexcept
  {
    return entries_.end();
  }

  /// Number of strictly positive entries.
  std::size_t support_size() const noexcept;

  friend bool operator==(ProbabilityVector const &, ProbabilityVector const &) = default;

private:
  struct Trusted
  {};
  ProbabilityVector(Trusted, std::vector<double> entries)
    : entries_(std::move(entries))
  {}

  std::vector<double> entries_;
};

/// A nonnegative vector with no sum constraint (counts, masses).
class UnnormalizedMeasure
{
public:
  explicit UnnormalizedMeasure(std::vector<double> entries);
  UnnormalizedMeasure(ProbabilityVector const &p)
    : entries_(p.begin(), p.end())
  {}

  std::span<double const> values() const noexcept
  {
    return entries_;
  }
  operator std::span<double const>() const noexcept
  {
    return entries_;
  }
  std::size_t size() const noexcept
  {
    return entries_.size();
  }
  double operator[](std::size_t i) const
  {
    return entries_[i];
  }
  double total() const noexcept;

  friend bool operator==(UnnormalizedMeasure const &, UnnormalizedMeasure const &) = default;

private:
  std::vector<double> entries_;
};

/// Joint law of (X, Y) given as a prior over Y and one conditional row
/// p(.|y) over X per outcome y.
class JointDistribution
{
public:
  JointDistribution(ProbabilityVector prior, std::vector<ProbabilityVector> conditionals);

  ProbabilityVector const &prior() const noexcept
  {
    return prior_;
  }
  std::vector<ProbabilityVector> const &conditionals() const noexcept
  {
    return conditionals_;
  }
  /// |Y|
  std::size_t rows() const noexcept
  {
    return conditionals_.size();
  }
  /// |X|
  std::size_t cols() const noexcept
  {
    return conditionals_.front().size();
  }

  /// p(x, y) = prior[y] * p(x|y)
  double cell(std::size_t y, std::size_t x) const
  {
    return prior_[y] * conditionals_[y][x];
  }

  /// Table p(x, y) flattened row-major by y, then x.
  ProbabilityVector table() const;
  ProbabilityVector marginal_x() const;
  ProbabilityVector const &marginal_y() const noexcept
  {
    return prior_;
  }

  /// The same joint law with the roles of X and Y exchanged: prior p(x),
  /// rows p(y|x). Rows for outcomes with p(x) = 0 are uniform; they carry
  /// zero weight in every functional that uses them.
  JointDistribution swapped() const;

private:
  ProbabilityVector              prior_;
  std::vector<ProbabilityVector> conditionals_;
};

/// sum_j weights[j] * dists[j]
ProbabilityVector mixture(ProbabilityVector const &weights, std::span<ProbabilityVector const> dists);
UnnormalizedMeasure mixture(ProbabilityVector const &weights, std::span<UnnormalizedMeasure const> measures);

/// Independent product, entry (i, j) = p[i] * r[j], flattened row-major.
ProbabilityVector product(ProbabilityVector const &p, ProbabilityVector const &r);

JointDistribution joint_from_conditional(ProbabilityVector prior, std::vector<ProbabilityVector> conditionals);

}  // namespace nonext
