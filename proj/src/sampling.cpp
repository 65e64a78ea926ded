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

#include "nonext/sampling.hpp"

#include "nonext/errors.hpp"

#include <algorithm>
#include <numeric>

namespace nonext {

void SamplingPlan::validate() const
{
  if (trials < 1)
  {
    throw ArgumentError("SamplingPlan: trials must be >= 1");
  }
  for (SizeRange const &r : {n_range, m_range})
  {
    if (r.min < 1 || r.min > r.max)
    {
      throw ArgumentError("SamplingPlan: size range must satisfy 1 <= min <= max");
    }
  }
  if (q_grid.empty())
  {
    throw ArgumentError("SamplingPlan: empty q grid");
  }
  for (double q : q_grid)
  {
    if (!(q >= 0.0))
    {
      throw ArgumentError("SamplingPlan: q grid values must be >= 0");
    }
  }
}

ProbabilityVector SimplexSampler::dirichlet(std::size_t n)
{
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double>                   draws(n);
  for (double &d : draws)
  {
    d = exp1(engine_);
  }
  return ProbabilityVector::normalized(draws);
}

ProbabilityVector SimplexSampler::sparse(std::size_t n)
{
  if (n < 2)
  {
    return vertex(n);
  }
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double>                   draws(n);
  for (double &d : draws)
  {
    d = exp1(engine_);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), engine_);
  std::size_t const zeros = 1 + index(n - 1);  // 1 .. n-1, so one entry survives
  for (std::size_t k = 0; k < zeros; ++k)
  {
    draws[order[k]] = 0.0;
  }
  return ProbabilityVector::normalized(draws);
}

ProbabilityVector SimplexSampler::vertex(std::size_t n)
{
  return ProbabilityVector::degenerate(n, index(n));
}

ProbabilityVector SimplexSampler::simplex_point(std::size_t n)
{
  double const u = unit();
  if (u < 0.70)
  {
    return dirichlet(n);
  }
  if (u < 0.92)
  {
    return sparse(n);
  }
  return vertex(n);
}

double SimplexSampler::unit()
{
  return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
}

std::size_t SimplexSampler::index(std::size_t n)
{
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

std::size_t SimplexSampler::size_in(SizeRange range)
{
  return std::uniform_int_distribution<std::size_t>(range.min, range.max)(engine_);
}

double SimplexSampler::pick(std::span<double const> values)
{
  return values[index(values.size())];
}

}  // namespace nonext
