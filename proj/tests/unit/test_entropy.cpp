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
#include "nonext/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace nonext;

namespace {

ProbabilityVector const kP(std::vector<double>{0.1, 0.2, 0.7});

}  // namespace

TEST_CASE("PhiFunction")
{
  CHECK_THROWS_AS(PhiFunction([](double q) { return q; }), InvalidPhiError);
  auto const phi = PhiFunction::tsallis();
  CHECK(phi(2.0) == 1.0);
  CHECK(phi(0.5) == -0.5);
  CHECK(phi(1.0) == 0.0);

  PhiFunction const wrong_sign([](double q) { return 1.0 - q; });
  CHECK_THROWS_AS(wrong_sign(2.0), InvalidPhiError);
  PhiFunction const vanishing([](double q) { return q < 2.0 ? q - 1.0 : 0.0; });
  CHECK_THROWS_AS(vanishing(3.0), InvalidPhiError);
}

TEST_CASE("nonextensive_entropy")
{
  auto const phi = PhiFunction::tsallis();
  for (double q : {0.0, 0.5, 1.0, 2.0, 3.0})
  {
    CHECK(nonextensive_entropy(ProbabilityVector::degenerate(3, 1), q, phi) == doctest::Approx(0.0));
    CHECK(nonextensive_entropy(kP, q, phi) == doctest::Approx(tsallis_entropy(kP, q)).epsilon(1e-13));
  }
  CHECK(nonextensive_entropy(ProbabilityVector::uniform(2), 2.0, phi) == doctest::Approx(0.5));

  // phi(q) = 2 (q - 1) halves the Tsallis entropy away from q = 1.
  PhiFunction const doubled([](double q) { return 2.0 * (q - 1.0); });
  CHECK(nonextensive_entropy(kP, 2.5, doubled) == doctest::Approx(0.5 * tsallis_entropy(kP, 2.5)).epsilon(1e-14));
}

TEST_CASE("shannon_entropy")
{
  CHECK(shannon_entropy(ProbabilityVector::degenerate(4, 0)) == 0.0);
  CHECK(shannon_entropy(ProbabilityVector::uniform(2)) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  for (std::size_t n = 1; n <= 9; ++n)
  {
    CHECK(shannon_entropy(ProbabilityVector::uniform(n)) ==
          doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-14));
  }
  CHECK(shannon_entropy(kP) == doctest::Approx(0.80181855254333730856).epsilon(1e-14));
}

TEST_CASE("tsallis_entropy values")
{
  for (double q : {0.0, 0.5, 1.0, 2.0, 3.0})
  {
    CHECK(tsallis_entropy(ProbabilityVector::degenerate(3, 2), q) == 0.0);
  }
  CHECK(tsallis_entropy(ProbabilityVector::uniform(2), 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  for (std::size_t n = 1; n <= 7; ++n)
  {
    double const nd = static_cast<double>(n);
    for (double q : {0.0, 0.25, 0.5, 1.5, 2.0, 3.0})
    {
      CHECK(tsallis_entropy(ProbabilityVector::uniform(n), q) ==
            doctest::Approx((1.0 - std::pow(nd, 1.0 - q)) / (q - 1.0)).epsilon(1e-13));
    }
  }
  CHECK(tsallis_entropy(kP, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(tsallis_entropy(kP, 0.5) == doctest::Approx(1.2002027761017428409).epsilon(1e-14));
  CHECK(tsallis_entropy(kP, 2.5) == doctest::Approx(0.37932384367875752306).epsilon(1e-14));
  CHECK(tsallis_entropy(kP, 1.0) == doctest::Approx(shannon_entropy(kP)).epsilon(1e-15));
}

TEST_CASE("tsallis_term")
{
  CHECK(tsallis_term(0.0, 0.0) == 0.0);
  CHECK(tsallis_term(0.0, 1.0) == 0.0);
  CHECK(tsallis_term(0.0, 2.0) == 0.0);
  CHECK(tsallis_term(0.5, 2.0) == doctest::Approx(0.25));
  CHECK(tsallis_term(0.5, 1.0) == doctest::Approx(0.5 * std::log(2.0)));
}

TEST_CASE("tsallis_entropy of unnormalized measures")
{
  std::vector<double> const x{2.0, 0.0, 3.0};
  CHECK(tsallis_entropy(x, 2.0) == doctest::Approx((2.0 - 4.0) + (3.0 - 9.0)));
  CHECK(tsallis_entropy(x, 1.0) == doctest::Approx(-2.0 * std::log(2.0) - 3.0 * std::log(3.0)));
}

TEST_CASE("tsallis_entropy properties")
{
  testing::Spacings rng(21);
  for (int t = 0; t < 1000; ++t)
  {
    std::size_t const n = rng.size(1, 8);
    auto const        p = rng.sparse_point(n);
    double const      h = shannon_entropy(p);
    CHECK(std::abs(tsallis_entropy(p, 1.0 + 1e-6) - h) <= 1e-5);
    CHECK(std::abs(tsallis_entropy(p, 1.0 - 1e-6) - h) <= 1e-5);
    for (double q : {0.0, 0.3, 0.5, 1.0, 1.5, 2.0, 3.0})
    {
      double const s = tsallis_entropy(p, q);
      CHECK(s >= 0.0);
      CHECK(s <= tsallis_entropy(ProbabilityVector::uniform(n), q) + 1e-12);
    }
  }
}

TEST_CASE("pseudoadditivity")
{
  testing::Spacings rng(22);
  for (int t = 0; t < 1000; ++t)
  {
    auto const p = rng.sparse_point(rng.size(1, 5));
    auto const r = rng.sparse_point(rng.size(1, 5));
    for (double q : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0})
    {
      double const sp = tsallis_entropy(p, q);
      double const sr = tsallis_entropy(r, q);
      CHECK(std::abs(tsallis_entropy(product(p, r), q) - (sp + sr + (1.0 - q) * sp * sr)) <= 1e-10);
    }
  }
}

TEST_CASE("renyi_entropy")
{
  for (double q : {0.0, 0.5, 2.0, 3.0})
  {
    CHECK(renyi_entropy(ProbabilityVector::degenerate(3, 0), q) == doctest::Approx(0.0));
    for (std::size_t n = 1; n <= 6; ++n)
    {
      CHECK(renyi_entropy(ProbabilityVector::uniform(n), q) ==
            doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-13));
    }
  }
  CHECK(renyi_entropy(kP, 0.5) == doctest::Approx(0.94013398953978592159).epsilon(1e-14));
  CHECK(renyi_entropy(kP, 3.0) == doctest::Approx(0.52206205169201998045).epsilon(1e-14));
  CHECK(std::abs(renyi_entropy(kP, 1.0 + 1e-7) - shannon_entropy(kP)) <= 1e-5);
  CHECK(std::abs(renyi_entropy(kP, 1.0 - 1e-7) - shannon_entropy(kP)) <= 1e-5);
}

TEST_CASE("expandability")
{
  testing::Spacings rng(23);
  for (int t = 0; t < 500; ++t)
  {
    auto const          drawn = rng.sparse_point(rng.size(1, 6));
    std::vector<double> v(drawn.begin(), drawn.end());
    ProbabilityVector const p(v);
    v.push_back(0.0);
    ProbabilityVector const padded(v);
    CHECK(shannon_entropy(padded) == shannon_entropy(p));
    for (double q : {0.0, 0.5, 1.0, 2.0, 3.0})
    {
      CHECK(tsallis_entropy(padded, q) == tsallis_entropy(p, q));
      CHECK(renyi_entropy(padded, q) == renyi_entropy(p, q));
    }
  }
}

TEST_CASE("phi_entropy")
{
  ScalarFunction const zero{[](double) { return 0.0; }, 0.0, 1.0};
  CHECK(phi_entropy(kP, zero) == 0.0);

  ScalarFunction const xlogx{[](double x) { return x > 0.0 ? x * std::log(x) : 0.0; }, 0.0, 1.0};
  CHECK(phi_entropy(kP, xlogx) == doctest::Approx(shannon_entropy(kP)).epsilon(1e-15));

  double const         q = 2.5;
  ScalarFunction const tsallis_phi{[q](double x) { return (std::pow(x, q) - x) / (q - 1.0); }, 0.0, 1.0};
  CHECK(phi_entropy(kP, tsallis_phi) == doctest::Approx(tsallis_entropy(kP, q)).epsilon(1e-14));

  std::vector<double> const outside{0.5, 1.5};
  CHECK_THROWS_AS(phi_entropy(outside, xlogx), DomainError);
}

TEST_CASE("joint and conditional entropies")
{
  auto const diag = joint_from_conditional(
      ProbabilityVector::uniform(2), {ProbabilityVector::degenerate(2, 0), ProbabilityVector::degenerate(2, 1)});
  CHECK(tsallis_joint_entropy(diag, 2.0) == doctest::Approx(0.5));
  CHECK(tsallis_conditional_entropy(diag, 2.0) == doctest::Approx(0.0));
  CHECK(tsallis_mutual_entropy(diag, 2.0) == doctest::Approx(0.5));
  // D_2 of the diagonal table against U_4 is 1, not I_2 = 0.5.
  CHECK(tsallis_mutual_entropy_alt(diag, 2.0) == doctest::Approx(1.0));

  auto const uniform_joint =
      joint_from_conditional(ProbabilityVector::uniform(2), {ProbabilityVector::uniform(2), ProbabilityVector::uniform(2)});
  for (double q : {0.0, 0.5, 1.0, 2.0})
  {
    CHECK(tsallis_joint_entropy(uniform_joint, q) ==
          doctest::Approx(tsallis_entropy(ProbabilityVector::uniform(4), q)).epsilon(1e-14));
  }

  auto const deterministic = joint_from_conditional(ProbabilityVector::degenerate(2, 1),
                                                    {ProbabilityVector::uniform(3), ProbabilityVector::degenerate(3, 2)});
  CHECK(tsallis_joint_entropy(deterministic, 1.5) == doctest::Approx(0.0));

  auto const half = joint_from_conditional(ProbabilityVector::uniform(2),
                                           {ProbabilityVector::degenerate(2, 0), ProbabilityVector::uniform(2)});
  CHECK(tsallis_conditional_entropy(half, 2.0) == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("conditional entropy factorizations")
{
  testing::Spacings rng(24);
  for (int t = 0; t < 300; ++t)
  {
    std::size_t const m     = rng.size(1, 4);
    std::size_t const n     = rng.size(1, 5);
    auto const        prior = rng.sparse_point(m);
    auto const        row   = rng.sparse_point(n);
    std::vector<ProbabilityVector> same(m, row);
    std::vector<ProbabilityVector> corners;
    for (std::size_t j = 0; j < m; ++j)
    {
      corners.push_back(ProbabilityVector::degenerate(n, rng.size(0, n - 1)));
    }
    for (double q : {0.0, 0.5, 1.0, 2.0, 3.0})
    {
      CHECK(tsallis_conditional_entropy(joint_from_conditional(prior, same), q) ==
            doctest::Approx(power_sum(prior, q == 1.0 ? 1.0 : q) * tsallis_entropy(row, q)).epsilon(1e-12));
      CHECK(tsallis_conditional_entropy(joint_from_conditional(prior, corners), q) == 0.0);
    }
  }
}

TEST_CASE("chain rule")
{
  testing::Spacings rng(25);
  for (int t = 0; t < 1000; ++t)
  {
    std::size_t const              m = rng.size(1, 4);
    std::size_t const              n = rng.size(1, 5);
    std::vector<ProbabilityVector> rows;
    for (std::size_t j = 0; j < m; ++j)
    {
      rows.push_back(rng.sparse_point(n));
    }
    auto const joint = joint_from_conditional(rng.sparse_point(m), rows);
    for (double q : {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0})
    {
      double const whole = tsallis_joint_entropy(joint, q);
      CHECK(std::abs(whole - (tsallis_entropy(joint.marginal_y(), q) + tsallis_conditional_entropy(joint, q))) <=
            1e-10);
      CHECK(std::abs(whole - (tsallis_entropy(joint.marginal_x(), q) +
                              tsallis_conditional_entropy(joint.swapped(), q))) <= 1e-10);
    }
  }
}

TEST_CASE("mutual entropies")
{
  testing::Spacings rng(26);
  for (int t = 0; t < 300; ++t)
  {
    std::size_t const m     = rng.size(1, 4);
    std::size_t const n     = rng.size(1, 5);
    auto const        row   = rng.sparse_point(n);
    auto const        indep = joint_from_conditional(rng.sparse_point(m), std::vector<ProbabilityVector>(m, row));
    for (double q : {0.0, 0.5, 1.0, 2.0})
    {
      CHECK(std::abs(tsallis_mutual_entropy_alt(indep, q)) <= 1e-12);
    }
    CHECK(std::abs(tsallis_mutual_entropy(indep, 1.0)) <= 1e-12);

    std::vector<ProbabilityVector> rows;
    for (std::size_t j = 0; j < m; ++j)
    {
      rows.push_back(rng.point(n));
    }
    auto const joint = joint_from_conditional(rng.point(m), rows);
    CHECK(std::abs(tsallis_mutual_entropy(joint, 1.0) - tsallis_mutual_entropy_alt(joint, 1.0)) <= 1e-12);
  }
}
