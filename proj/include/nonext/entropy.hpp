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
#include "nonext/qmath.hpp"

#include <functional>
#include <span>

namespace nonext {

/// Scale function phi of the generic nonextensive entropy
/// S_{q,phi}(p) = (1 - sum_i p_i^q) / phi(q).
///
/// phi(1) = 0 is checked at construction. The sign condition
/// sign(phi(q)) = sign(q - 1) is checked each time phi is evaluated, since it
/// cannot be established globally for an opaque function. Differentiability
/// at 1 with phi'(1) = 1 is assumed, not verified.
class PhiFunction
{
public:
  static constexpr double kZeroTolerance = 1e-12;

  explicit PhiFunction(std::function<double(double)> phi);

  /// phi(q) = q - 1, giving the Tsallis entropy.
  static PhiFunction tsallis();

  /// Throws InvalidPhiError when the sign condition fails at q.
  double operator()(QParameter q) const;

private:
  std::function<double(double)> phi_;
};

/// (1/phi(q)) (1 - sum_i p_i^q), with k = 1. For q = 1 this is the Shannon
/// entropy (the q -> 1 limit, given phi'(1) = 1).
double nonextensive_entropy(ProbabilityVector const &p, QParameter q, PhiFunction const &phi);

/// -sum_i p_i ln p_i in nats, with 0 ln 0 := 0.
double shannon_entropy(std::span<double const> p);

/// Per-entry Tsallis term: -y ln y at q = 1, (y - y^q)/(q - 1) otherwise,
/// and 0 at y = 0 for every q.
double tsallis_term(double y, QParameter q);

/// sum_i tsallis_term(x_i, q). Accepts probability vectors and unnormalized
/// measures; on the simplex this equals (1 - sum_i p_i^q)/(q - 1).
double tsallis_entropy(std::span<double const> x, QParameter q);

/// (1/(1-q)) ln sum_i p_i^q; Shannon entropy at q = 1.
///
/// Defined for every q >= 0 but only concave for q in [0, 1); Jensen-type
/// quantities built on it lose their sign guarantee for q > 1.
double renyi_entropy(ProbabilityVector const &p, QParameter q);

/// A scalar function together with the closed interval it accepts.
struct ScalarFunction
{
  std::function<double(double)> fn;
  double                        lower;
  double                        upper;
};

/// -sum_i varphi(x_i). Throws DomainError for entries outside
/// [varphi.lower, varphi.upper].
double phi_entropy(std::span<double const> x, ScalarFunction const &varphi);

/// S_q(X, Y): Tsallis entropy of the flattened joint table.
double tsallis_joint_entropy(JointDistribution const &joint, QParameter q);

/// S_q(X | Y) = -sum_{x,y} p(x,y)^q ln_q p(x|y) over cells with p(x,y) > 0,
/// which factors as sum_y p(y)^q S_q(X | y).
double tsallis_conditional_entropy(JointDistribution const &joint, QParameter q);

/// I_q(X; Y) = S_q(X) - S_q(X | Y).
double tsallis_mutual_entropy(JointDistribution const &joint, QParameter q);

/// Alternative mutual entropy D_q(p_{X,Y} || p_X (x) p_Y). Differs from
/// tsallis_mutual_entropy except at q = 1.
double tsallis_mutual_entropy_alt(JointDistribution const &joint, QParameter q);

}  // namespace nonext
