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

#include "nonext/qmath.hpp"

#include "nonext/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace nonext {

QParameter::QParameter(double q)
  : q_(q)
{
  if (!std::isfinite(q) || q < 0.0)
  {
    throw ArgumentError("entropic index q must be finite and >= 0, got " + std::to_string(q));
  }
}

bool QParameter::is_one() const noexcept
{
  return std::abs(q_ - 1.0) < kLimitThreshold;
}

double pow0(double x, double q) noexcept
{
  return x == 0.0 ? 0.0 : std::pow(x, q);
}

double q_log(double x, QParameter q)
{
  if (!(x > 0.0))
  {
    throw DomainError("q_log: argument must be positive");
  }
  if (q.is_one())
  {
    return std::log(x);
  }
  // expm1 keeps (x^{1-q} - 1) accurate when (1-q) ln x is small.
  double const a = 1.0 - q.value();
  return std::expm1(a * std::log(x)) / a;
}

double q_log_at_zero(QParameter q) noexcept
{
  if (q.is_one() || q.value() > 1.0)
  {
    return -std::numeric_limits<double>::infinity();
  }
  return -1.0 / (1.0 - q.value());
}

double power_sum(std::span<double const> masses, QParameter q)
{
  double sum = 0.0;
  for (double m : masses)
  {
    sum += pow0(m, q.value());
  }
  return sum;
}

double q_expectation(std::span<double const> values, ProbabilityVector const &weights, QParameter q)
{
  if (values.size() != weights.size())
  {
    throw ArgumentError("q_expectation: " + std::to_string(values.size()) + " values for " +
                        std::to_string(weights.size()) + " weights");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
  {
    double const w = q.is_one() ? weights[i] : pow0(weights[i], q.value());
    sum += values[i] * w;
  }
  return sum;
}

}  // namespace nonext
