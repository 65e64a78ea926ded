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

#include "nonext/divergence.hpp"

#include "nonext/entropy.hpp"
#include "nonext/errors.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace nonext {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_size(std::span<double const> p, std::span<double const> r, char const *what)
{
  if (p.size() != r.size())
  {
    throw ArgumentError(std::string(what) + ": support sizes differ (" + std::to_string(p.size()) + " vs " +
                        std::to_string(r.size()) + ")");
  }
}

template <typename Measure>
double q_difference_impl(EntropyFunctional const &psi, ProbabilityVector const &weights,
                         std::span<Measure const> args, QParameter q)
{
  auto const   center = mixture(weights, args);
  double const whole  = psi(center);
  double       parts  = 0.0;
  for (std::size_t j = 0; j < args.size(); ++j)
  {
    double const w = q.is_one() ? weights[j] : pow0(weights[j], q.value());
    if (w != 0.0)
    {
      parts += w * psi(args[j]);
    }
  }
  return whole - parts;
}

// (1+t) ln(1+t) + (1-t) ln(1-t) for t in [-1, 1]
double symmetric_log_term(double t)
{
  double const t2 = t * t;
  if (t2 < 1e-2)
  {
    // sum_k t^{2k} / (k (2k - 1))
    double sum  = 0.0;
    double tpow = t2;
    for (int k = 1; k <= 12; ++k)
    {
      sum += tpow / (k * (2.0 * k - 1.0));
      tpow *= t2;
    }
    return sum;
  }
  double const up   = 1.0 + t;
  double const down = 1.0 - t;
  return (up > 0.0 ? up * std::log(up) : 0.0) + (down > 0.0 ? down * std::log(down) : 0.0);
}

}  // namespace

EntropyFunctional EntropyFunctional::shannon()
{
  return {"shannon", [](std::span<double const> x) { return shannon_entropy(x); }};
}

EntropyFunctional EntropyFunctional::tsallis(QParameter q)
{
  return {"tsallis", [q](std::span<double const> x) { return tsallis_entropy(x, q); }};
}

EntropyFunctional EntropyFunctional::renyi(QParameter q)
{
  return {"renyi", [q](std::span<double const> x) {
            return renyi_entropy(ProbabilityVector(std::vector<double>(x.begin(), x.end())), q);
          }};
}

double kld(ProbabilityVector const &p, ProbabilityVector const &r)
{
  require_same_size(p, r, "kld");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    if (p[i] > 0.0)
    {
      if (r[i] == 0.0)
      {
        return kInf;
      }
      d += p[i] * std::log(p[i] / r[i]);
    }
  }
  return d;
}

double tsallis_relative_entropy(ProbabilityVector const &p, ProbabilityVector const &r, QParameter q)
{
  require_same_size(p, r, "tsallis_relative_entropy");
  if (q.is_one())
  {
    return kld(p, r);
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    if (p[i] > 0.0)
    {
      double const ln = r[i] > 0.0 ? q_log(r[i] / p[i], q) : q_log_at_zero(q);
      if (std::isinf(ln))
      {
        return kInf;
      }
      d -= p[i] * ln;
    }
  }
  return d;
}

double renyi_divergence(ProbabilityVector const &p, ProbabilityVector const &r, QParameter q)
{
  require_same_size(p, r, "renyi_divergence");
  if (q.is_one())
  {
    return kld(p, r);
  }
  double const a = 1.0 - q.value();
  // sum_i p_i^q r_i^{1-q} - 1 = sum_{p_i>0} p_i ((r_i/p_i)^{1-q} - 1)
  double excess = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
  {
    if (p[i] > 0.0)
    {
      if (r[i] == 0.0)
      {
        if (a < 0.0)
        {
          return kInf;
        }
        excess -= p[i];
      }
      else
      {
        excess += p[i] * std::expm1(a * std::log(r[i] / p[i]));
      }
    }
  }
  if (!(excess > -1.0))
  {
    return kInf;
  }
  return std::log1p(excess) / -a;
}

double jensen_difference(EntropyFunctional const &psi, ProbabilityVector const &weights,
                         std::span<ProbabilityVector const> args)
{
  return q_difference_impl(psi, weights, args, QParameter(1.0));
}

double jensen_difference(EntropyFunctional const &psi, ProbabilityVector const &weights,
                         std::span<UnnormalizedMeasure const> args)
{
  return q_difference_impl(psi, weights, args, QParameter(1.0));
}

double jensen_q_difference(EntropyFunctional const &psi, ProbabilityVector const &weights,
                           std::span<ProbabilityVector const> args, QParameter q)
{
  return q_difference_impl(psi, weights, args, q);
}

double jensen_q_difference(EntropyFunctional const &psi, ProbabilityVector const &weights,
                           std::span<UnnormalizedMeasure const> args, QParameter q)
{
  return q_difference_impl(psi, weights, args, q);
}

double jsd(ProbabilityVector const &weights, std::span<ProbabilityVector const> args)
{
  return jensen_difference(EntropyFunctional::shannon(), weights, args);
}

double jrd(ProbabilityVector const &weights, std::span<ProbabilityVector const> args, QParameter q)
{
  return jensen_difference(EntropyFunctional::renyi(q), weights, args);
}

double jtd(ProbabilityVector const &weights, std::span<ProbabilityVector const> args, QParameter q)
{
  return jensen_difference(EntropyFunctional::tsallis(q), weights, args);
}

double jtqd(ProbabilityVector const &weights, std::span<ProbabilityVector const> args, QParameter q)
{
  return jensen_q_difference(EntropyFunctional::tsallis(q), weights, args, q);
}

double jtqd2(ProbabilityVector const &p1, ProbabilityVector const &p2, QParameter q)
{
  require_same_size(p1, p2, "jtqd2");
  ProbabilityVector const weights = ProbabilityVector::uniform(2);
  ProbabilityVector const args[]  = {p1, p2};
  return jtqd(weights, args, q);
}

double boolean_difference(ProbabilityVector const &p1, ProbabilityVector const &p2, double zero_tolerance)
{
  require_same_size(p1, p2, "boolean_difference");
  double shared = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i)
  {
    if (p1[i] > zero_tolerance && p2[i] > zero_tolerance)
    {
      shared += 1.0;
    }
  }
  return 1.0 - shared;
}

double jensen_shannon2(ProbabilityVector const &p1, ProbabilityVector const &p2)
{
  require_same_size(p1, p2, "jensen_shannon2");
  // With s = a + b and t = (a - b)/s, the i-th term of
  // KL(a||m)/2 + KL(b||m)/2 is (s/4) [(1+t) ln(1+t) + (1-t) ln(1-t)].
  double js = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i)
  {
    double const s = p1[i] + p2[i];
    if (s > 0.0)
    {
      js += 0.25 * s * symmetric_log_term((p1[i] - p2[i]) / s);
    }
  }
  return js;
}

double linear_difference(ProbabilityVector const &p1, ProbabilityVector const &p2)
{
  require_same_size(p1, p2, "linear_difference");
  double inner = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i)
  {
    inner += p1[i] * p2[i];
  }
  return 0.5 - 0.5 * inner;
}

double expected_kld(ProbabilityVector const &weights, std::span<ProbabilityVector const> args,
                    ProbabilityVector const &center)
{
  if (weights.size() != args.size())
  {
    throw ArgumentError("expected_kld: weights and arguments differ in count");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < args.size(); ++j)
  {
    if (weights[j] > 0.0)
    {
      total += weights[j] * kld(args[j], center);
    }
  }
  return total;
}

CheckReport bregman_minimizer_check(ProbabilityVector const &weights, std::span<ProbabilityVector const> args,
                                    std::span<ProbabilityVector const> candidates)
{
  CheckReport report;
  report.name      = "bregman_minimizer";
  report.tolerance = 1e-12;

  auto const   center  = mixture(weights, args);
  double const optimum = expected_kld(weights, args, center);
  for (std::size_t c = 0; c < candidates.size(); ++c)
  {
    double const value = expected_kld(weights, args, candidates[c]);
    report.record(optimum - value, [&] {
      return "candidate " + std::to_string(c) + " " + format_vector(candidates[c]) +
             " expected_kld=" + format_exact(value) + " at_mixture=" + format_exact(optimum);
    });
  }
  return report;
}

}  // namespace nonext
