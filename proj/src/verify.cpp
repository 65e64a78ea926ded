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

#include "nonext/verify.hpp"

#include "nonext/divergence.hpp"
#include "nonext/entropy.hpp"
#include "nonext/errors.hpp"
#include "nonext/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nonext {
namespace {

std::string q_tag(char const *name, double q)
{
  return std::string(name) + "[q=" + format_value(q) + "]";
}

double weight_power(double w, QParameter q)
{
  return q.is_one() ? w : pow0(w, q.value());
}

/// lambda a + (1 - lambda) b
ProbabilityVector blend(ProbabilityVector const &a, ProbabilityVector const &b, double lambda)
{
  ProbabilityVector const weights(std::vector<double>{lambda, 1.0 - lambda});
  ProbabilityVector const parts[] = {a, b};
  return mixture(weights, parts);
}

std::vector<ProbabilityVector> draw_points(SimplexSampler &sampler, std::size_t count, std::size_t n)
{
  std::vector<ProbabilityVector> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j)
  {
    out.push_back(sampler.simplex_point(n));
  }
  return out;
}

std::string describe_args(std::span<ProbabilityVector const> args)
{
  std::string out = "[";
  for (std::size_t j = 0; j < args.size(); ++j)
  {
    if (j > 0)
    {
      out += ", ";
    }
    out += format_vector(args[j]);
  }
  return out + "]";
}

std::string describe_instance(double q, ProbabilityVector const &weights, std::span<ProbabilityVector const> args)
{
  return "q=" + format_exact(q) + " weights=" + format_vector(weights) + " args=" + describe_args(args);
}

CheckReport new_report(std::string name, SamplingPlan const &plan, double tolerance)
{
  plan.validate();
  CheckReport report;
  report.name      = std::move(name);
  report.seed      = plan.seed;
  report.tolerance = tolerance;
  return report;
}

}  // namespace

CheckReport check_q_jensen(VectorFunction const &f, QParameter q, SamplingPlan const &plan, double tolerance)
{
  auto           report = new_report(q_tag("q_jensen", q.value()), plan, tolerance);
  SimplexSampler sampler(plan.seed);
  for (std::size_t t = 0; t < plan.trials; ++t)
  {
    std::size_t const m       = sampler.size_in(plan.m_range);
    std::size_t const n       = sampler.size_in(plan.n_range);
    auto const        weights = sampler.simplex_point(m);
    auto const        points  = draw_points(sampler, m, n);

    double const lhs = f(mixture(weights, points));
    double       rhs = 0.0;
    for (std::size_t j = 0; j < m; ++j)
    {
      double const w = weight_power(weights[j], q);
      if (w != 0.0)
      {
        rhs += w * f(points[j]);
      }
    }
    report.record(lhs - rhs, [&] { return describe_instance(q.value(), weights, points); });
  }
  return report;
}

CheckReport check_q_convexity_monotonicity(VectorFunction const &f, double q, double q_prime,
                                           ConvexityImplication implication, SamplingPlan const &plan,
                                           double tolerance)
{
  if (!(q >= q_prime && q_prime >= 0.0))
  {
    throw ArgumentError("check_q_convexity_monotonicity: requires q >= q' >= 0");
  }
  bool const  nonneg = implication == ConvexityImplication::kNonnegativeConvex;
  std::string name   = std::string(nonneg ? "q_monotonicity_convex" : "q_monotonicity_concave") +
                     "[q=" + format_value(q) + ",q'=" + format_value(q_prime) + "]";
  auto           report = new_report(std::move(name), plan, tolerance);
  SimplexSampler sampler(plan.seed);

  std::size_t pairs = 0;
  for (std::size_t t = 0; t < plan.trials; ++t)
  {
    std::size_t const n      = sampler.size_in(plan.n_range);
    auto const        x      = sampler.simplex_point(n);
    auto const        y      = sampler.simplex_point(n);
    double const      lambda = t == 0 ? 0.0 : t == 1 ? 1.0 : sampler.unit();
    auto const        mid    = blend(x, y, lambda);
    ++pairs;

    double const fx = f(x);
    double const fy = f(y);
    double const fm = f(mid);
    auto const   describe = [&] {
      return "x=" + format_vector(x) + " y=" + format_vector(y) + " lambda=" + format_exact(lambda);
    };
    if (fx < 0.0 || fy < 0.0 || fm < 0.0)
    {
      report.note = "precondition f >= 0 violated";
      report.record(std::numeric_limits<double>::infinity(), describe);
      continue;
    }

    auto const combo = [&](double exponent) {
      return pow0(lambda, exponent) * fx + pow0(1.0 - lambda, exponent) * fy;
    };
    if (nonneg)
    {
      if (fm <= combo(q) + tolerance)
      {
        report.record(fm - combo(q_prime), describe);
      }
    }
    else if (-fm <= -combo(q_prime) + tolerance)
    {
      report.record(combo(q) - fm, describe);
    }
  }
  if (report.samples == 0)
  {
    report.note = "premise never held in " + std::to_string(pairs) + " pairs";
  }
  return report;
}

CheckReport check_jtqd_bounds(SamplingPlan const &plan, double tolerance)
{
  auto           report = new_report("jtqd_bounds", plan, tolerance);
  SimplexSampler sampler(plan.seed);

  for (std::size_t t = 0; t < plan.trials; ++t)
  {
    QParameter const  q       = sampler.pick(plan.q_grid);
    std::size_t const m       = sampler.size_in(plan.m_range);
    std::size_t const n       = sampler.size_in(plan.n_range);
    auto const        weights = sampler.simplex_point(m);
    auto const        args    = draw_points(sampler, m, n);

    double const value      = jtqd(weights, args, q);
    double const upper      = tsallis_entropy(weights, q);
    double       violation  = value - upper;
    char const  *bound_name = "upper";
    if (q.is_one() || q.value() >= 1.0)
    {
      if (-value > violation)
      {
        violation  = -value;
        bound_name = "nonnegativity";
      }
    }
    if (q.is_one() || q.value() <= 1.0)
    {
      double const lower = upper * (1.0 - std::pow(static_cast<double>(n), 1.0 - q.value()));
      if (lower - value > violation)
      {
        violation  = lower - value;
        bound_name = "lower";
      }
    }
    report.record(violation, [&] {
      return std::string(bound_name) + " bound: " + describe_instance(q.value(), weights, args) +
             " jtqd=" + format_exact(value);
    });
  }

  // Equality cases at every grid q.
  for (double qv : plan.q_grid)
  {
    QParameter const q(qv);
    for (std::size_t m = plan.m_range.min; m <= plan.m_range.max; ++m)
    {
      std::size_t const n       = std::max(m, plan.n_range.min);
      auto const        weights = sampler.dirichlet(m);
      double const      s_pi    = tsallis_entropy(weights, q);

      std::vector<ProbabilityVector> disjoint;
      std::vector<ProbabilityVector> repeated;
      std::vector<ProbabilityVector> uniform;
      for (std::size_t j = 0; j < m; ++j)
      {
        disjoint.push_back(ProbabilityVector::degenerate(n, j));
        repeated.push_back(ProbabilityVector::degenerate(n, 0));
        uniform.push_back(ProbabilityVector::uniform(n));
      }

      double const at_disjoint = jtqd(weights, disjoint, q);
      report.record(std::abs(at_disjoint - s_pi), [&] {
        return "disjoint vertices attain S_q(pi): " + describe_instance(qv, weights, disjoint) +
               " jtqd=" + format_exact(at_disjoint) + " S_q(pi)=" + format_exact(s_pi);
      });
      if (q.is_one() || qv >= 1.0)
      {
        double const at_repeated = jtqd(weights, repeated, q);
        report.record(std::abs(at_repeated), [&] {
          return "repeated vertex attains 0: " + describe_instance(qv, weights, repeated) +
                 " jtqd=" + format_exact(at_repeated);
        });
      }
      if (q.is_one() || qv <= 1.0)
      {
        double const at_uniform = jtqd(weights, uniform, q);
        double const lower      = s_pi * (1.0 - std::pow(static_cast<double>(n), 1.0 - qv));
        report.record(std::abs(at_uniform - lower), [&] {
          return "uniform arguments attain the lower bound: " + describe_instance(qv, weights, uniform) +
                 " jtqd=" + format_exact(at_uniform) + " bound=" + format_exact(lower);
        });
      }
    }
  }
  return report;
}

CheckReport check_joint_convexity(QParameter q, SamplingPlan const &plan, double tolerance)
{
  if (q.value() > 1.0 && !q.is_one())
  {
    throw ArgumentError("check_joint_convexity: q must lie in [0, 1]");
  }
  auto           report = new_report(q_tag("joint_convexity", q.value()), plan, tolerance);
  SimplexSampler sampler(plan.seed);
  for (std::size_t t = 0; t < plan.trials; ++t)
  {
    std::size_t const m       = sampler.size_in(plan.m_range);
    std::size_t const n       = sampler.size_in(plan.n_range);
    auto const        weights = sampler.simplex_point(m);
    auto const        a       = draw_points(sampler, m, n);
    auto const        b       = draw_points(sampler, m, n);
    double const      lambda  = t == 0 ? 0.0 : t == 1 ? 1.0 : sampler.unit();

    std::vector<ProbabilityVector> blended;
    for (std::size_t j = 0; j < m; ++j)
    {
      blended.push_back(blend(a[j], b[j], lambda));
    }
    double const lhs = jtqd(weights, blended, q);
    double const rhs = lambda * jtqd(weights, a, q) + (1.0 - lambda) * jtqd(weights, b, q);
    report.record(lhs - rhs, [&] {
      return describe_instance(q.value(), weights, a) + " other=" + describe_args(b) +
             " lambda=" + format_exact(lambda);
    });
  }
  return report;
}

CheckReport check_argument_convexity(QParameter q, SamplingPlan const &plan, double tolerance,
                                     double affine_tolerance)
{
  constexpr double h         = 1e-4;
  bool const       affine    = std::abs(q.value() - 2.0) < 1e-12;
  bool const       convex    = q.value() <= 2.0;
  auto             report    = new_report(q_tag("argument_convexity", q.value()), plan,
                                          affine ? affine_tolerance : tolerance);
  SimplexSampler   sampler(plan.seed);

  std::size_t attempts = 0;
  while (report.samples < plan.trials)
  {
    if (++attempts > 20 * plan.trials)
    {
      report.note = "could not draw enough perturbable arguments";
      break;
    }
    std::size_t const m       = sampler.size_in(plan.m_range);
    std::size_t const n       = std::max<std::size_t>(2, sampler.size_in(plan.n_range));
    auto const        weights = sampler.simplex_point(m);
    auto              args    = draw_points(sampler, m, n);
    std::size_t const k       = sampler.index(m);
    auto const        center  = args[k];

    // Tangent direction on coordinates that can move by h either way.
    std::vector<double>      direction(n, 0.0);
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
    {
      if (center[i] >= 2.0 * h)
      {
        free.push_back(i);
      }
    }
    if (free.size() < 2)
    {
      continue;
    }
    double mean = 0.0;
    for (std::size_t i : free)
    {
      direction[i] = 2.0 * sampler.unit() - 1.0;
      mean += direction[i];
    }
    mean /= static_cast<double>(free.size());
    double largest = 0.0;
    for (std::size_t i : free)
    {
      direction[i] -= mean;
      largest = std::max(largest, std::abs(direction[i]));
    }
    if (largest == 0.0)
    {
      continue;
    }
    std::vector<double> plus(n);
    std::vector<double> minus(n);
    for (std::size_t i = 0; i < n; ++i)
    {
      double const step = h * direction[i] / largest;
      plus[i]           = center[i] + step;
      minus[i]          = center[i] - step;
    }

    double const mid_value = jtqd(weights, args, q);
    args[k]                = ProbabilityVector(plus);
    double const plus_value = jtqd(weights, args, q);
    args[k]                 = ProbabilityVector(minus);
    double const minus_value = jtqd(weights, args, q);
    args[k]                  = center;

    double const second = plus_value - 2.0 * mid_value + minus_value;
    double const violation = affine ? std::abs(second) : convex ? -second : second;
    report.record(violation, [&] {
      return "argument " + std::to_string(k) + " direction " + format_vector(direction) + " " +
             describe_instance(q.value(), weights, args) + " second_difference=" + format_exact(second);
    });
  }
  return report;
}

char const *to_string(SuyariAxiom axiom)
{
  switch (axiom)
  {
  case SuyariAxiom::kContinuity:
    return "continuity";
  case SuyariAxiom::kMaximality:
    return "maximality";
  case SuyariAxiom::kGeneralizedAdditivity:
    return "generalized_additivity";
  case SuyariAxiom::kExpandability:
    return "expandability";
  }
  return "unknown";
}

CheckReport check_suyari_axiom(SuyariAxiom axiom, QParameter q, SamplingPlan const &plan)
{
  double tolerance = 0.0;
  switch (axiom)
  {
  case SuyariAxiom::kContinuity:
    tolerance = 1e-5;
    break;
  case SuyariAxiom::kMaximality:
    tolerance = 1e-12;
    break;
  case SuyariAxiom::kGeneralizedAdditivity:
    tolerance = 1e-10;
    break;
  case SuyariAxiom::kExpandability:
    tolerance = 1e-15;
    break;
  }
  auto report = new_report(std::string("suyari_") + to_string(axiom) + "[q=" + format_value(q.value()) + "]",
                           plan, tolerance);
  SimplexSampler sampler(plan.seed);

  for (std::size_t t = 0; t < plan.trials; ++t)
  {
    std::size_t const n = sampler.size_in(plan.n_range);
    switch (axiom)
    {
    case SuyariAxiom::kContinuity: {
      constexpr double eps = 1e-8;
      auto const       p   = sampler.dirichlet(n);
      // d_i = p_i (u_i - sum_j p_j u_j): sums to zero, |d_i| <= 2 p_i.
      std::vector<double> u(n);
      double              mean = 0.0;
      for (std::size_t i = 0; i < n; ++i)
      {
        u[i] = 2.0 * sampler.unit() - 1.0;
        mean += p[i] * u[i];
      }
      std::vector<double> moved(n);
      for (std::size_t i = 0; i < n; ++i)
      {
        moved[i] = p[i] + eps * p[i] * (u[i] - mean);
      }
      double const base      = tsallis_entropy(p, q);
      double const in_p      = std::abs(tsallis_entropy(ProbabilityVector(moved), q) - base);
      double const in_q      = std::abs(tsallis_entropy(p, q.value() + eps) - base);
      double const violation = std::max(in_p, in_q);
      report.record(violation, [&] {
        return "q=" + format_exact(q.value()) + " p=" + format_vector(p) + " moved=" + format_vector(moved) +
               " |dS| in p=" + format_exact(in_p) + " in q=" + format_exact(in_q);
      });
      break;
    }
    case SuyariAxiom::kMaximality: {
      auto const   p     = sampler.simplex_point(n);
      double const value = tsallis_entropy(p, q);
      double const top   = tsallis_entropy(ProbabilityVector::uniform(n), q);
      report.record(value - top, [&] {
        return "q=" + format_exact(q.value()) + " p=" + format_vector(p) + " S_q(p)=" + format_exact(value) +
               " S_q(U)=" + format_exact(top);
      });
      break;
    }
    case SuyariAxiom::kGeneralizedAdditivity: {
      std::size_t const        blocks = std::max<std::size_t>(2, n);
      std::vector<std::size_t> sizes(blocks);
      std::size_t              total = 0;
      for (auto &s : sizes)
      {
        s = 1 + sampler.index(3);
        total += s;
      }
      auto const fine = sampler.simplex_point(total);

      std::vector<double> coarse(blocks, 0.0);
      double              within = 0.0;
      std::size_t         offset = 0;
      for (std::size_t b = 0; b < blocks; ++b)
      {
        std::vector<double> block(fine.begin() + static_cast<std::ptrdiff_t>(offset),
                                  fine.begin() + static_cast<std::ptrdiff_t>(offset + sizes[b]));
        offset += sizes[b];
        for (double v : block)
        {
          coarse[b] += v;
        }
        if (coarse[b] > 0.0)
        {
          within += weight_power(coarse[b], q) * tsallis_entropy(ProbabilityVector::normalized(block), q);
        }
      }
      double const lhs = tsallis_entropy(fine, q);
      double const rhs = tsallis_entropy(ProbabilityVector(coarse), q) + within;
      report.record(std::abs(lhs - rhs), [&] {
        std::string layout;
        for (auto s : sizes)
        {
          layout += std::to_string(s) + " ";
        }
        return "q=" + format_exact(q.value()) + " fine=" + format_vector(fine) + " block sizes=" + layout +
               "lhs=" + format_exact(lhs) + " rhs=" + format_exact(rhs);
      });
      break;
    }
    case SuyariAxiom::kExpandability: {
      auto const          drawn = sampler.simplex_point(n);
      std::vector<double> padded(drawn.begin(), drawn.end());
      ProbabilityVector const p(padded);
      padded.push_back(0.0);
      ProbabilityVector const expanded(padded);
      double const            violation = std::max({std::abs(tsallis_entropy(expanded, q) - tsallis_entropy(p, q)),
                                                    std::abs(shannon_entropy(expanded) - shannon_entropy(p)),
                                                    std::abs(renyi_entropy(expanded, q) - renyi_entropy(p, q))});
      report.record(violation, [&] { return "q=" + format_exact(q.value()) + " p=" + format_vector(p); });
      break;
    }
    }
  }
  return report;
}

CheckReport check_suyari_axioms(QParameter q, SamplingPlan const &plan)
{
  CheckReport tightest;
  std::size_t total   = 0;
  bool        first   = true;
  for (auto axiom : {SuyariAxiom::kContinuity, SuyariAxiom::kMaximality, SuyariAxiom::kGeneralizedAdditivity,
                     SuyariAxiom::kExpandability})
  {
    auto report = check_suyari_axiom(axiom, q, plan);
    total += report.samples;
    if (first || report.worst_violation - report.tolerance > tightest.worst_violation - tightest.tolerance)
    {
      tightest = std::move(report);
      first    = false;
    }
  }
  tightest.witness = tightest.name + ": " + tightest.witness;
  tightest.name    = "suyari_axioms[q=" + format_value(q.value()) + "]";
  tightest.samples = total;
  return tightest;
}

CheckReport check_sqrt_jsd_triangle(SamplingPlan const &plan, double tolerance)
{
  auto           report = new_report("sqrt_jsd_triangle", plan, tolerance);
  SimplexSampler sampler(plan.seed);
  for (std::size_t t = 0; t < plan.trials; ++t)
  {
    std::size_t const n   = sampler.size_in(plan.n_range);
    auto const        a   = sampler.simplex_point(n);
    auto const        b   = sampler.simplex_point(n);
    auto const        c   = sampler.simplex_point(n);
    double const      ab  = std::sqrt(jensen_shannon2(a, b));
    double const      bc  = std::sqrt(jensen_shannon2(b, c));
    double const      ac  = std::sqrt(jensen_shannon2(a, c));
    double const      violation = std::max({ac - ab - bc, ab - ac - bc, bc - ab - ac});
    report.record(violation, [&] {
      return "a=" + format_vector(a) + " b=" + format_vector(b) + " c=" + format_vector(c);
    });
  }
  return report;
}

CheckReport check_bregman_minimizer(SamplingPlan const &plan, std::size_t candidates_per_instance)
{
  auto           report = new_report("bregman_minimizer", plan, 1e-12);
  SimplexSampler sampler(plan.seed);
  for (std::size_t t = 0; t < plan.trials; ++t)
  {
    std::size_t const m          = sampler.size_in(plan.m_range);
    std::size_t const n          = sampler.size_in(plan.n_range);
    auto const        weights    = sampler.simplex_point(m);
    auto const        args       = draw_points(sampler, m, n);
    auto const        candidates = draw_points(sampler, candidates_per_instance, n);
    auto const        part       = bregman_minimizer_check(weights, args, candidates);
    report.samples += part.samples - 1;
    report.record(part.worst_violation, [&] {
      return "weights=" + format_vector(weights) + " args=" + describe_args(args) + " " + part.witness;
    });
  }
  return report;
}

CheckReport check_minimizer(SamplingPlan const &plan, std::size_t grid_points, double tolerance)
{
  auto           report  = new_report("jtqd_minimizer", plan, tolerance);
  SimplexSampler sampler(plan.seed);
  std::size_t const targets = std::min<std::size_t>(plan.trials, 50);
  for (double qv : {0.0, 0.5, 1.0, 1.5, 2.0})
  {
    QParameter const q(qv);
    for (std::size_t t = 0; t < targets; ++t)
    {
      std::size_t const n      = sampler.size_in(plan.n_range);
      auto const        p2     = sampler.dirichlet(n);
      auto const        result = minimize_jtqd_first_arg(p2, q);

      double best_other = jtqd2(p2, p2, q);
      for (std::size_t g = 0; g < grid_points; ++g)
      {
        best_other = std::min(best_other, jtqd2(sampler.simplex_point(n), p2, q));
      }
      double const gap = result.objective - best_other;
      if (!result.converged)
      {
        report.note = "descent hit the iteration cap at least once";
      }
      report.record(gap, [&] {
        return "q=" + format_exact(qv) + " p2=" + format_vector(p2) + " argmin=" + format_vector(result.argmin) +
               " objective=" + format_exact(result.objective) + " best_sampled=" + format_exact(best_other) +
               (result.converged ? "" : " (not converged)");
      });
    }
  }
  return report;
}

std::vector<SuiteCheck> verification_suite()
{
  std::vector<SuiteCheck> suite;

  suite.push_back({"q_jensen", [](SamplingPlan const &plan) {
                     std::vector<CheckReport> out;
                     for (double qv : plan.q_grid)
                     {
                       if (qv < 1.0)
                       {
                         continue;
                       }
                       QParameter const q(qv);
                       auto const       negated = [q](std::span<double const> x) { return -tsallis_entropy(x, q); };
                       out.push_back(check_q_jensen(negated, q, plan));
                     }
                     return out;
                   }});

  suite.push_back({"q_monotonicity", [](SamplingPlan const &plan) {
                     std::vector<CheckReport> out;
                     // S_q(U_n) - S_q(p) is nonnegative and convex: 1-convex => q'-convex.
                     for (double qp : {0.0, 0.5})
                     {
                       auto const gap = [](std::span<double const> x) {
                         return tsallis_entropy(ProbabilityVector::uniform(x.size()), 2.0) - tsallis_entropy(x, 2.0);
                       };
                       out.push_back(check_q_convexity_monotonicity(gap, 1.0, qp,
                                                                    ConvexityImplication::kNonnegativeConvex, plan));
                     }
                     // -S_q is 1-convex => q-convex for q >= 1.
                     for (double q : {1.5, 2.0, 3.0})
                     {
                       auto const entropy = [](std::span<double const> x) { return tsallis_entropy(x, 2.0); };
                       out.push_back(check_q_convexity_monotonicity(entropy, q, 1.0,
                                                                    ConvexityImplication::kNegatedConcave, plan));
                     }
                     return out;
                   }});

  suite.push_back({"bounds", [](SamplingPlan const &plan) { return std::vector{check_jtqd_bounds(plan)}; }});

  suite.push_back({"joint_convexity", [](SamplingPlan const &plan) {
                     std::vector<CheckReport> out;
                     for (double q : {0.0, 0.25, 0.5, 0.75, 1.0})
                     {
                       out.push_back(check_joint_convexity(q, plan));
                     }
                     return out;
                   }});

  suite.push_back({"argument_convexity", [](SamplingPlan const &plan) {
                     std::vector<CheckReport> out;
                     for (double q : {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0})
                     {
                       out.push_back(check_argument_convexity(q, plan));
                     }
                     return out;
                   }});

  suite.push_back({"suyari", [](SamplingPlan const &plan) {
                     std::vector<CheckReport> out;
                     for (double q : plan.q_grid)
                     {
                       out.push_back(check_suyari_axioms(q, plan));
                     }
                     return out;
                   }});

  suite.push_back({"bregman", [](SamplingPlan const &plan) {
                     SamplingPlan fewer = plan;
                     fewer.trials       = std::max<std::size_t>(1, plan.trials / 10);
                     return std::vector{check_bregman_minimizer(fewer)};
                   }});

  suite.push_back({"triangle", [](SamplingPlan const &plan) { return std::vector{check_sqrt_jsd_triangle(plan)}; }});

  suite.push_back({"minimizer", [](SamplingPlan const &plan) { return std::vector{check_minimizer(plan)}; }});

  return suite;
}

}  // namespace nonext
