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

#include "nonext/check_report.hpp"
#include "nonext/measures.hpp"
#include "nonext/qmath.hpp"

#include <functional>
#include <span>
#include <string>

namespace nonext {

/// A generalized entropy Psi over nonnegative vectors.
struct EntropyFunctional
{
  std::string                                      name;
  std::function<double(std::span<double const>)> eval;

  double operator()(std::span<double const> x) const
  {
    return eval(x);
  }

  static EntropyFunctional shannon();
  static EntropyFunctional tsallis(QParameter q);
  /// Arguments must lie on the simplex.
  static EntropyFunctional renyi(QParameter q);
};

/// Kullback-Leibler divergence in nats; +inf when p puts mass where r has none.
double kld(ProbabilityVector const &p, ProbabilityVector const &r);

/// D_q(p || r) = -sum_x p(x) ln_q(r(x)/p(x)), summing over p(x) > 0.
///
/// Where r(x) = 0 < p(x) the limit ln_q(0) is used: the result is finite for
/// q < 1 and +inf for q >= 1. Reduces to kld at q = 1.
double tsallis_relative_entropy(ProbabilityVector const &p, ProbabilityVector const &r, QParameter q);

/// (1/(q-1)) ln sum_i p_i^q r_i^{1-q}; kld at q = 1, +inf where the sum
/// degenerates.
double renyi_divergence(ProbabilityVector const &p, ProbabilityVector const &r, QParameter q);

/// Psi(sum_j w_j x_j) - sum_j w_j Psi(x_j)
double jensen_difference(EntropyFunctional const &psi, ProbabilityVector const &weights,
                         std::span<ProbabilityVector const> args);
double jensen_difference(EntropyFunctional const &psi, ProbabilityVector const &weights,
                         std::span<UnnormalizedMeasure const> args);

/// Psi(sum_j w_j x_j) - sum_j w_j^q Psi(x_j), with 0^q := 0.
///
/// Accepts any Psi; nothing here relies on concavity. At q = 1 this is
/// jensen_difference.
double jensen_q_difference(EntropyFunctional const &psi, ProbabilityVector const &weights,
                           std::span<ProbabilityVector const> args, QParameter q);
double jensen_q_difference(EntropyFunctional const &psi, ProbabilityVector const &weights,
                           std::span<UnnormalizedMeasure const> args, QParameter q);

/// Jensen-Shannon divergence (Jensen difference of Shannon entropy).
double jsd(ProbabilityVector const &weights, std::span<ProbabilityVector const> args);

/// Jensen-Renyi divergence. Nonnegative for q in [0, 1); may be negative above.
double jrd(ProbabilityVector const &weights, std::span<ProbabilityVector const> args, QParameter q);

/// Jensen-Tsallis divergence (ordinary Jensen difference of S_q).
double jtd(ProbabilityVector const &weights, std::span<ProbabilityVector const> args, QParameter q);

/// Jensen-Tsallis q-difference: S_q(sum_j w_j p_j) - sum_j w_j^q S_q(p_j).
///
/// Equals the Tsallis mutual entropy of the joint law with prior `weights`
/// and rows `args`. Bounded above by S_q(weights) for all q; nonnegative for
/// q >= 1; bounded below by S_q(weights)(1 - n^{1-q}) for q in [0, 1].
double jtqd(ProbabilityVector const &weights, std::span<ProbabilityVector const> args, QParameter q);

/// jtqd with weights (1/2, 1/2).
double jtqd2(ProbabilityVector const &p1, ProbabilityVector const &p2, QParameter q);

/// Closed form of jtqd2 at q = 0: 1 - #{i : p1_i > tol and p2_i > tol}.
/// Use tol = 0 for exactly constructed vectors, a small positive tol for
/// floating data whose zeros may carry rounding noise.
double boolean_difference(ProbabilityVector const &p1, ProbabilityVector const &p2, double zero_tolerance = 0.0);

/// Closed form of jtqd2 at q = 1: the two-argument Jensen-Shannon divergence,
/// evaluated termwise so that it stays accurate when p1 and p2 are close.
double jensen_shannon2(ProbabilityVector const &p1, ProbabilityVector const &p2);

/// Closed form of jtqd2 at q = 2: 1/2 - <p1, p2>/2.
double linear_difference(ProbabilityVector const &p1, ProbabilityVector const &p2);

/// sum_y w_y kld(p_y || center)
double expected_kld(ProbabilityVector const &weights, std::span<ProbabilityVector const> args,
                    ProbabilityVector const &center);

/// Checks that the mixture minimizes the expected KL divergence: for every
/// candidate Q, expected_kld(mixture) <= expected_kld(Q) + 1e-12.
CheckReport bregman_minimizer_check(ProbabilityVector const &weights, std::span<ProbabilityVector const> args,
                                    std::span<ProbabilityVector const> candidates);

}  // namespace nonext
