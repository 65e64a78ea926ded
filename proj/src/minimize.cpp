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

#include "nonext/minimize.hpp"

#include "nonext/divergence.hpp"
#include "nonext/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace nonext {
namespace {

// Lower clamp applied to entries before differentiating.
constexpr double kGradientFloor = 1e-12;

// Backtracking may grow the step up to this multiple of the initial step.
constexpr double kMaxStepGrowth = 1e6;

// d/dx of the Tsallis term at x > 0.
double tsallis_term_slope(double x, QParameter q)
{
  x = std::max(x, kGradientFloor);
  if (q.is_one())
  {
    return -std::log(x) - 1.0;
  }
  double const a = q.value() - 1.0;
  // (1 - q x^{q-1})/(q-1) = -1 - q (x^{q-1} - 1)/(q-1)
  return -1.0 - q.value() * std::expm1(a * std::log(x)) / a;
}

// Same slope without the floor; x = 0 gives the one-sided limit.
double exact_slope(double x, QParameter q)
{
  if (q.is_one())
  {
    return -std::log(x) - 1.0;
  }
  double const a = q.value() - 1.0;
  return -1.0 - q.value() * std::expm1(a * std::log(x)) / a;
}

// Bisects on doubles until the bracket can no longer shrink.
template <typename F>
double bisect(double lo, double hi, F const &is_high, std::size_t &steps)
{
  for (int k = 0; k < 2200; ++k, ++steps)
  {
    double const mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
    {
      break;
    }
    (is_high(mid) ? hi : lo) = mid;
  }
  return hi;
}

// For 0 < q < 2 the objective is a sum of convex functions f_i(p1_i), so a
// point is optimal iff f_i'(p1_i) equals a common multiplier on the support
// and is at least that value off it. Coordinates with p2_i = 0 have constant
// f_i'.
MinimizeResult solve_stationarity(ProbabilityVector const &p2, QParameter q)
{
  std::size_t const n     = p2.size();
  double const      scale = std::pow(2.0, -q.value());
  auto const        slope = [&](std::size_t i, double x) {
    return 0.5 * exact_slope(0.5 * (x + p2[i]), q) - scale * exact_slope(x, q);
  };

  std::vector<std::size_t> curved;
  std::vector<std::size_t> flat;
  for (std::size_t i = 0; i < n; ++i)
  {
    (p2[i] > 0.0 ? curved : flat).push_back(i);
  }

  std::size_t steps      = 0;
  auto const  coordinate = [&](std::size_t i, double lambda) {
    if (slope(i, 0.0) >= lambda)
    {
      return 0.0;
    }
    if (slope(i, 1.0) <= lambda)
    {
      return 1.0;
    }
    return bisect(0.0, 1.0, [&](double x) { return slope(i, x) >= lambda; }, steps);
  };
  auto const curved_mass = [&](double lambda, std::vector<double> &x) {
    double total = 0.0;
    for (std::size_t i : curved)
    {
      x[i] = coordinate(i, lambda);
      total += x[i];
    }
    return total;
  };

  std::vector<double> x(n, 0.0);
  double const        flat_slope = flat.empty() ? 0.0 : slope(flat.front(), 0.5);
  if (!flat.empty() && curved_mass(flat_slope, x) <= 1.0)
  {
    double const rest = 1.0 - std::accumulate(x.begin(), x.end(), 0.0);
    for (std::size_t i : flat)
    {
      x[i] = rest / static_cast<double>(flat.size());
    }
  }
  else
  {
    double const share = 1.0 / static_cast<double>(curved.size());
    double       lo    = slope(curved.front(), share);
    double       hi    = lo;
    for (std::size_t i : curved)
    {
      lo = std::min(lo, slope(i, share));
      hi = std::max(hi, slope(i, share));
    }
    if (!flat.empty())
    {
      hi = std::min(hi, flat_slope);
    }
    double const lambda = bisect(lo, hi, [&](double l) { return curved_mass(l, x) >= 1.0; }, steps);
    curved_mass(lambda, x);
    for (std::size_t i : flat)
    {
      x[i] = 0.0;
    }
  }
  ProbabilityVector argmin = ProbabilityVector::normalized(x);
  double const      value  = jtqd2(argmin, p2, q);
  return MinimizeResult{std::move(argmin), value, steps, true};
}

std::vector<double> gradient_first_arg(std::span<double const> p1, std::span<double const> p2, QParameter q)
{
  double const        scale = std::pow(2.0, -q.value());
  std::vector<double> g(p1.size());
  for (std::size_t i = 0; i < p1.size(); ++i)
  {
    double const m = 0.5 * (p1[i] + p2[i]);
    g[i]           = 0.5 * tsallis_term_slope(m, q) - scale * tsallis_term_slope(p1[i], q);
  }
  return g;
}

// Projected gradient descent with backtracking.
MinimizeResult descend(ProbabilityVector const &p2, QParameter q, std::size_t iterations, double tolerance)
{
  std::size_t const n         = p2.size();
  auto const        objective = [&](ProbabilityVector const &p1) { return jtqd2(p1, p2, q); };

  std::vector<double> start(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    start[i] = 0.5 * (p2[i] + 1.0 / static_cast<double>(n));
  }
  ProbabilityVector x  = ProbabilityVector::normalized(start);
  double            fx = objective(x);

  double const initial_step = q.value() > 0.0 ? 0.1 / q.value() : 0.1;
  double       step         = initial_step;
  bool         converged    = false;
  std::size_t  iter         = 0;
  for (; iter < iterations && !converged; ++iter)
  {
    auto const gradient = gradient_first_arg(x, p2, q);
    step                = std::min(kMaxStepGrowth * initial_step, 2.0 * step);
    bool accepted       = false;
    for (int halving = 0; halving < 80; ++halving)
    {
      std::vector<double> trial(n);
      for (std::size_t i = 0; i < n; ++i)
      {
        trial[i] = x[i] - step * gradient[i];
      }
      ProbabilityVector y(project_to_simplex(trial));
      double            fy      = objective(y);
      double            linear  = 0.0;
      double            sq_norm = 0.0;
      double            max_mov = 0.0;
      for (std::size_t i = 0; i < n; ++i)
      {
        double const d = y[i] - x[i];
        linear += gradient[i] * d;
        sq_norm += d * d;
        max_mov = std::max(max_mov, std::abs(d));
      }
      if (max_mov <= tolerance)
      {
        converged = true;
        accepted  = true;
        break;
      }
      if (fy <= fx + linear + sq_norm / (2.0 * step))
      {
        x        = std::move(y);
        fx       = fy;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted)
    {
      // Step collapsed without meeting the decrease condition: x is
      // stationary up to rounding.
      converged = true;
    }
  }

  return MinimizeResult{std::move(x), fx, iter, converged};
}

}  // namespace

std::vector<double> project_to_simplex(std::span<double const> v)
{
  if (v.empty())
  {
    throw ArgumentError("project_to_simplex: empty vector");
  }
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double theta      = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k)
  {
    cumulative += sorted[k];
    double const candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0)
    {
      theta = candidate;
    }
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
  {
    out[i] = std::max(v[i] - theta, 0.0);
  }
  // Remove the rounding residue.
  double const total = std::accumulate(out.begin(), out.end(), 0.0);
  for (double &x : out)
  {
    x /= total;
  }
  return out;
}

MinimizeResult minimize_jtqd_first_arg(ProbabilityVector const &p2, QParameter q, std::size_t iterations,
                                       double tolerance)
{
  std::size_t const n         = p2.size();
  auto const        objective = [&](ProbabilityVector const &p1) { return jtqd2(p1, p2, q); };

  MinimizeResult best = q.value() > 0.0 && q.value() < 2.0 ? solve_stationarity(p2, q)
                                                           : descend(p2, q, iterations, tolerance);
  auto const consider = [&](ProbabilityVector const &candidate) {
    double const value = objective(candidate);
    if (value < best.objective)
    {
      best.argmin    = candidate;
      best.objective = value;
    }
  };
  consider(p2);
  consider(ProbabilityVector::uniform(n));
  for (std::size_t i = 0; i < n; ++i)
  {
    consider(ProbabilityVector::degenerate(n, i));
  }
  return best;
}

}  // namespace nonext
