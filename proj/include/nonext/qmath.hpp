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

#include <span>

namespace nonext {

/// Entropic index q >= 0.
///
/// Values with |q - 1| < kLimitThreshold are treated as exactly 1 by every
/// function in the library, which then takes the logarithmic (Shannon/KL)
/// branch instead of evaluating a q-deformed formula.
class QParameter
{
public:
  static constexpr double kLimitThreshold = 1e-9;

  /// Throws ArgumentError for negative or non-finite q.
  QParameter(double q);  // NOLINT: implicit so call sites read `tsallis_entropy(p, 2.0)`

  double value() const noexcept
  {
    return q_;
  }
  bool is_one() const noexcept;

private:
  double q_;
};

/// x^q with 0^q := 0 for every q >= 0, including q = 0.
double pow0(double x, double q) noexcept;

/// ln_q(x) = (x^{1-q} - 1) / (1 - q), or ln(x) in the q = 1 branch.
/// Throws DomainError for x <= 0.
double q_log(double x, QParameter q);

/// Limit of ln_q(x) as x -> 0+: -1/(1-q) for q < 1, -inf otherwise.
/// Only the relative entropies rely on this.
double q_log_at_zero(QParameter q) noexcept;

/// sum_i m_i^q, with 0^0 := 0 so that q = 0 counts the nonzero entries.
double power_sum(std::span<double const> masses, QParameter q);

/// Unnormalized q-expectation sum_x x * P(x)^q. For q = 1 this is the
/// ordinary mean. Throws ArgumentError on a length mismatch.
double q_expectation(std::span<double const> values, ProbabilityVector const &weights, QParameter q);

}  // namespace nonext
