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

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace nonext {

struct SizeRange
{
  std::size_t min = 2;
  std::size_t max = 6;
};

/// What a sampled check draws and how many times.
struct SamplingPlan
{
  std::uint64_t       seed    = 1;
  std::size_t         trials  = 1000;
  SizeRange           n_range = {2, 6};  ///< support size of each distribution
  SizeRange           m_range = {2, 4};  ///< number of mixed distributions
  std::vector<double> q_grid  = {0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0, 2.25, 2.5, 2.75, 3.0};

  /// Throws ArgumentError unless trials >= 1, 1 <= min <= max for both
  /// ranges, and the q grid is nonempty with every q >= 0.
  void validate() const;
};

/// Seeded generator of simplex points for the verification checks.
///
/// Besides flat Dirichlet(1) draws it produces points on faces and vertices
/// of the simplex, where most extremal cases sit.
class SimplexSampler
{
public:
  explicit SimplexSampler(std::uint64_t seed)
    : engine_(seed)
  {}

  /// Uniform on the simplex (symmetric Dirichlet with unit concentration).
  ProbabilityVector dirichlet(std::size_t n);
  /// A Dirichlet draw with a random nonempty proper subset of entries zeroed.
  ProbabilityVector sparse(std::size_t n);
  ProbabilityVector vertex(std::size_t n);
  /// 70% dirichlet, 22% sparse, 8% vertex.
  ProbabilityVector simplex_point(std::size_t n);

  double      unit();  ///< uniform on [0, 1)
  std::size_t index(std::size_t n);  ///< uniform on {0, ..., n-1}
  std::size_t size_in(SizeRange range);
  double      pick(std::span<double const> values);

  std::mt19937_64 &engine() noexcept
  {
    return engine_;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace nonext
