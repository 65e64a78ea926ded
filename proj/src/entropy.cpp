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

#include "nonext/entropy.hpp"

#include "nonext/divergence.hpp"
#include "nonext/errors.hpp"

#include <cmath>
#include <string>

namespace nonext {

PhiFunction::PhiFunction(std::function<double(double)> phi)
  : phi_(std::move(phi))
{
  if (!phi_)
  {
    throw ArgumentError("PhiFunction: empty function");
  }
  if (std::abs(phi_(1.0)) > kZeroTolerance)
  {
    throw InvalidPhiError("PhiFunction: phi(1) must vanish");
  }
}

PhiFunction PhiFunction::tsallis()
{
  return PhiFunction([](double q) { return q - 1.0; });
}

double PhiFunction::operator()(QParameter q) const
{
  double const value = phi_(q.value());
  if (q.is_one())
  {
    return 0.0;
  }
  bool const sign_ok = q.value() > 1.0 ? value > 0.0 : value < 0.0;
  if (!sign_ok || !std::isfinite(value))
  {
    throw InvalidPhiError("PhiFunction: phi(" + std::to_string(q.value()) + ") = " + std::to_string(value) +
                          " does not have the sign of q - 1");
  }
  return value;
}

double nonextensive_entropy(ProbabilityVector const &p, QParameter q, PhiFunction const &phi)
{
  if (q.is_one())
  {
    return shannon_entropy(p);
  }
  return (1.0 - power_sum(p, q)) / phi(q);
}

double shannon_entropy(std::span<double const> p)
{
  double h = 0.0;
  for (double v : p)
  {
    if (v > 0.0)
    {
      h -= v * std::log(v);
    }
  }
  return h;
}

double tsallis_term(double y, QParameter q)
{
  if (y == 0.0)
  {
    return 0.0;
  }
  if (q.is_one())
  {
    return -y * std::log(y);
  }
  double const a = q.value() - 1.0;
  if (std::abs(a) < 0.5)
  {
    // y - y^q = -y (y^{q-1} - 1); expm1 avoids cancellation near q = 1.
    return -y * std::expm1(a * std::log(y)) / a;
  }
  return (y - std::pow(y, q.value())) / a;
}

double tsallis_entropy(std::span<double const> x, QParameter q)
{
  double s = 0.0;
  for (double v : x)
  {
    s += tsallis_term(v, q);
  }
  return s;
}

double renyi_entropy(ProbabilityVector const &p, QParameter q)
{
  if (q.is_one())
  {
    return shannon_entropy(p);
  }
  // sum_i p_i^q - 1 = sum_i p_i (p_i^{q-1} - 1), accumulated without cancellation.
  double const a = q.value() - 1.0;
  double       excess = 0.0;
  for (double v : p)
  {
    if (v > 0.0)
    {
      excess += v * std::expm1(a * std::log(v));
    }
  }
  if (!(excess > -1.0))
  {
    throw DomainError("renyi_entropy: power sum vanishes");
  }
  return std::log1p(excess) / (1.0 - q.value());
}

double phi_entropy(std::span<double const> x, ScalarFunction const &varphi)
{
  double s = 0.0;
  for (double v : x)
  {
    if (!(v >= varphi.lower && v <= varphi.upper))
    {
      throw DomainError("phi_entropy: entry " + std::to_string(v) + " outside [" + std::to_string(varphi.lower) +
                        ", " + std::to_string(varphi.upper) + "]");
    }
    s -= varphi.fn(v);
  }
  return s;
}

double tsallis_joint_entropy(JointDistribution const &joint, QParameter q)
{
  return tsallis_entropy(joint.table(), q);
}

double tsallis_conditional_entropy(JointDistribution const &joint, QParameter q)
{
  double s = 0.0;
  for (std::size_t y = 0; y < joint.rows(); ++y)
  {
    auto const &row = joint.conditionals()[y];
    for (std::size_t x = 0; x < joint.cols(); ++x)
    {
      double const pxy = joint.cell(y, x);
      if (pxy > 0.0)
      {
        double const weight = q.is_one() ? pxy : std::pow(pxy, q.value());
        s -= weight * q_log(row[x], q);
      }
    }
  }
  return s;
}

double tsallis_mutual_entropy(JointDistribution const &joint, QParameter q)
{
  return tsallis_entropy(joint.marginal_x(), q) - tsallis_conditional_entropy(joint, q);
}

double tsallis_mutual_entropy_alt(JointDistribution const &joint, QParameter q)
{
  return tsallis_relative_entropy(joint.table(), product(joint.prior(), joint.marginal_x()), q);
}

}  // namespace nonext
