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

#include <cstddef>
#include <span>
#include <vector>

namespace nonext {

struct MinimizeResult
{
  ProbabilityVector argmin;
  double            objective = 0.0;
  std::size_t       iterations = 0;
  /// False when the descent hit the iteration cap before its step fell
  /// below the tolerance. Always true for 0 < q < 2. `argmin` is still the best point found.
  bool converged = false;
};

/// Euclidean projection onto the probability simplex.
std::vector<double> project_to_simplex(std::span<double const> v);

/// Minimizes p1 -> jtqd2(p1, p2, q) over the simplex.
///
/// For 0 < q < 2 the objective is a separable convex function of p1 and the
/// minimizer is found by bisection on the multiplier of the sum constraint.
/// Otherwise it runs projected gradient descent from (p2 + uniform)/2 with
/// initial step 0.1/q (0.1 at q = 0) and backtracking on the
/// sufficient-decrease condition. The final answer is the best of that
/// point, p2, the uniform distribution and every vertex. It is a global
/// minimizer for q <= 2 and a local one for q > 2.
MinimizeResult minimize_jtqd_first_arg(ProbabilityVector const &p2, QParameter q, std::size_t iterations = 500,
                                       double tolerance = 1e-12);

}  // namespace nonext
