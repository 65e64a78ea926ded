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
#include "nonext/qmath.hpp"
#include "nonext/sampling.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nonext {

/// Real-valued function of a simplex point.
using VectorFunction = std::function<double(std::span<double const>)>;

/// Samples q-Jensen inequalities f(sum_j w_j x_j) <= sum_j w_j^q f(x_j) with
/// weights w over m = plan.m_range points x_j drawn from the simplex of size
/// plan.n_range. Reports the largest lhs - rhs.
CheckReport check_q_jensen(VectorFunction const &f, QParameter q, SamplingPlan const &plan,
                           double tolerance = 1e-12);

/// Which monotonicity implication of q-convexity to exercise, for f >= 0 and
/// q >= q':
///   kNonnegativeConvex: f q-convex    => f q'-convex
///   kNegatedConcave:    -f q'-convex  => -f q-convex
enum class ConvexityImplication
{
  kNonnegativeConvex,
  kNegatedConcave,
};

/// Samples two-point combinations (x, y, lambda) and, wherever the premise
/// of the chosen implication holds, records the violation of its
/// conclusion. The first two samples use lambda = 0 and lambda = 1. A
/// negative value of f fails the report with a precondition note.
/// Throws ArgumentError unless q >= q_prime >= 0.
CheckReport check_q_convexity_monotonicity(VectorFunction const &f, double q, double q_prime,
                                           ConvexityImplication implication, SamplingPlan const &plan,
                                           double tolerance = 1e-12);

/// Upper bound S_q(pi) for every q, nonnegativity for q >= 1 and the lower
/// bound S_q(pi)(1 - n^{1-q}) for q in [0, 1], over plan.trials random
/// instances with q drawn from plan.q_grid, plus the three equality cases
/// (disjoint vertices, one repeated vertex, all uniform) at every grid q.
CheckReport check_jtqd_bounds(SamplingPlan const &plan, double tolerance = 1e-12);

/// Joint convexity of the JTqD in its m arguments for q in [0, 1]. Throws
/// ArgumentError for q outside [0, 1].
CheckReport check_joint_convexity(QParameter q, SamplingPlan const &plan, double tolerance = 1e-12);

/// Convexity (q <= 2) or concavity (q >= 2) of the JTqD in one argument,
/// via the central second difference T(p + h d) - 2 T(p) + T(p - h d) with
/// h = 1e-4 along random directions d tangent to the simplex. At q = 2 the
/// JTqD is affine in each argument and |second difference| is reported
/// against `affine_tolerance`.
CheckReport check_argument_convexity(QParameter q, SamplingPlan const &plan, double tolerance = 1e-9,
                                     double affine_tolerance = 1e-10);

enum class SuyariAxiom
{
  kContinuity,             ///< |S_q(p + eps d) - S_q(p)| and |S_{q+eps}(p) - S_q(p)| at eps = 1e-8
  kMaximality,             ///< S_q(p) <= S_q(U_n)
  kGeneralizedAdditivity,  ///< refinement identity over random block partitions
  kExpandability,          ///< appending a zero changes no entropy
};

char const *to_string(SuyariAxiom axiom);

/// Tolerances: continuity 1e-5, maximality 1e-12, generalized additivity
/// 1e-10, expandability 1e-15.
CheckReport check_suyari_axiom(SuyariAxiom axiom, QParameter q, SamplingPlan const &plan);

/// All four axioms for the Tsallis entropy at q. The returned report is the
/// axiom report with the least slack (largest worst_violation - tolerance),
/// its sample count replaced by the total; it passes iff every axiom passes.
CheckReport check_suyari_axioms(QParameter q, SamplingPlan const &plan);

/// Triangle inequality for sqrt of the two-argument Jensen-Shannon
/// divergence on random triples, all three orientations per triple.
CheckReport check_sqrt_jsd_triangle(SamplingPlan const &plan, double tolerance = 1e-12);

/// Expected KL divergence to the mixture against `candidates_per_instance`
/// random candidates, for plan.trials random instances.
CheckReport check_bregman_minimizer(SamplingPlan const &plan, std::size_t candidates_per_instance = 100);

/// Runs the minimizer on random targets at each q in {0, 0.5, 1, 1.5, 2}
/// and checks its objective against p2, the uniform distribution, every
/// vertex and `grid_points` random simplex points.
CheckReport check_minimizer(SamplingPlan const &plan, std::size_t grid_points = 200, double tolerance = 1e-9);

/// A named group of reports in the verification suite.
struct SuiteCheck
{
  std::string                                                  name;
  std::function<std::vector<CheckReport>(SamplingPlan const &)> run;
};

/// Every check, in fixed order: q_jensen, q_monotonicity, bounds,
/// joint_convexity, argument_convexity, suyari, bregman, triangle,
/// minimizer.
std::vector<SuiteCheck> verification_suite();

}  // namespace nonext
