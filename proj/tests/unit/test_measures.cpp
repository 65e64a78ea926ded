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

#include "nonext/errors.hpp"
#include "nonext/measures.hpp"
#include "nonext/qmath.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

using namespace nonext;

namespace {

std::vector<double> as_vector(std::span<double const> s)
{
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("ProbabilityVector construction")
{
  CHECK_THROWS_AS(ProbabilityVector(std::vector<double>{}), ArgumentError);
  CHECK_THROWS_AS(ProbabilityVector(std::vector<double>{0.5, -0.1, 0.6}), ArgumentError);
  CHECK_THROWS_AS(ProbabilityVector(std::vector<double>{0.5, 0.6}), ArgumentError);
  CHECK_THROWS_AS(ProbabilityVector(std::vector<double>{0.5, std::nan("")}), ArgumentError);

  ProbabilityVector const nearly(std::vector<double>{0.5 + 4e-10, 0.5});
  CHECK(std::accumulate(nearly.begin(), nearly.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-15));

  ProbabilityVector const exact(std::vector<double>{0.25, 0.75});
  CHECK(as_vector(exact) == std::vector<double>{0.25, 0.75});
}

TEST_CASE("ProbabilityVector factories")
{
  auto const d = ProbabilityVector::degenerate(4, 2);
  CHECK(as_vector(d) == std::vector<double>{0.0, 0.0, 1.0, 0.0});
  CHECK(d.support_size() == 1);
  CHECK_THROWS_AS(ProbabilityVector::degenerate(3, 3), ArgumentError);

  auto const u = ProbabilityVector::uniform(4);
  CHECK(as_vector(u) == std::vector<double>{0.25, 0.25, 0.25, 0.25});
  CHECK_THROWS_AS(ProbabilityVector::uniform(0), ArgumentError);

  std::vector<double> const counts{2.0, 0.0, 6.0};
  CHECK(as_vector(ProbabilityVector::normalized(counts)) == std::vector<double>{0.25, 0.0, 0.75});
  std::vector<double> const empty_mass{0.0, 0.0};
  CHECK_THROWS_AS(ProbabilityVector::normalized(empty_mass), ArgumentError);
}

TEST_CASE("UnnormalizedMeasure")
{
  UnnormalizedMeasure const m(std::vector<double>{2.0, 3.0});
  CHECK(m.total() == 5.0);
  CHECK_THROWS_AS(UnnormalizedMeasure(std::vector<double>{1.0, -1.0}), ArgumentError);
  UnnormalizedMeasure const from_p = ProbabilityVector::uniform(2);
  CHECK(from_p.total() == 1.0);
}

TEST_CASE("mixture examples")
{
  std::vector<ProbabilityVector> const corners{ProbabilityVector::degenerate(2, 0), ProbabilityVector::degenerate(2, 1)};
  CHECK(as_vector(mixture(ProbabilityVector::uniform(2), corners)) == std::vector<double>{0.5, 0.5});
  CHECK(as_vector(mixture(ProbabilityVector(std::vector<double>{0.25, 0.75}), corners)) ==
        std::vector<double>{0.25, 0.75});

  ProbabilityVector const              p(std::vector<double>{0.1, 0.2, 0.7});
  ProbabilityVector const              r(std::vector<double>{0.3, 0.3, 0.4});
  std::vector<ProbabilityVector> const pr{p, r};
  CHECK(mixture(ProbabilityVector::degenerate(2, 0), pr) == p);

  std::vector<ProbabilityVector> const mismatched{p, ProbabilityVector::uniform(2)};
  CHECK_THROWS_AS(mixture(ProbabilityVector::uniform(2), mismatched), ArgumentError);
  CHECK_THROWS_AS(mixture(ProbabilityVector::uniform(3), pr), ArgumentError);
}

TEST_CASE("mixture stays on the simplex")
{
  testing::Spacings rng(5);
  for (int t = 0; t < 1000; ++t)
  {
    std::size_t const              m = rng.size(1, 5);
    std::size_t const              n = rng.size(1, 7);
    std::vector<ProbabilityVector> args;
    for (std::size_t j = 0; j < m; ++j)
    {
      args.push_back(rng.sparse_point(n));
    }
    auto const mix = mixture(rng.sparse_point(m), args);
    CHECK(mix.size() == n);
    CHECK(std::accumulate(mix.begin(), mix.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    for (double x : mix)
    {
      CHECK(x >= 0.0);
    }
  }
}

TEST_CASE("unnormalized mixture")
{
  std::vector<UnnormalizedMeasure> const masses{UnnormalizedMeasure(std::vector<double>{2.0, 0.0}),
                                                UnnormalizedMeasure(std::vector<double>{0.0, 4.0})};
  auto const mix = mixture(ProbabilityVector::uniform(2), masses);
  CHECK(as_vector(mix.values()) == std::vector<double>{1.0, 2.0});
}

TEST_CASE("product examples")
{
  auto const d = ProbabilityVector::degenerate(2, 1);
  CHECK(product(d, d) == ProbabilityVector::degenerate(4, 3));
  CHECK(product(ProbabilityVector::uniform(2), ProbabilityVector::uniform(2)) == ProbabilityVector::uniform(4));
  auto const pr = product(ProbabilityVector(std::vector<double>{0.3, 0.7}), ProbabilityVector::uniform(2));
  CHECK(pr[0] == doctest::Approx(0.15));
  CHECK(pr[1] == doctest::Approx(0.15));
  CHECK(pr[2] == doctest::Approx(0.35));
  CHECK(pr[3] == doctest::Approx(0.35));
}

TEST_CASE("product power sums factor")
{
  testing::Spacings rng(8);
  for (int t = 0; t < 500; ++t)
  {
    auto const p = rng.sparse_point(rng.size(1, 5));
    auto const r = rng.sparse_point(rng.size(1, 5));
    for (double q : {0.0, 0.5, 1.0, 2.0, 3.0})
    {
      CHECK(testing::relative_gap(power_sum(product(p, r), q), power_sum(p, q) * power_sum(r, q)) <= 1e-12);
    }
  }
}

TEST_CASE("joint_from_conditional")
{
  ProbabilityVector const p(std::vector<double>{0.1, 0.2, 0.7});
  auto const              single = joint_from_conditional(ProbabilityVector::uniform(1), {p});
  CHECK(single.table() == p);

  auto const diag = joint_from_conditional(
      ProbabilityVector::uniform(2), {ProbabilityVector::degenerate(2, 0), ProbabilityVector::degenerate(2, 1)});
  CHECK(as_vector(diag.table()) == std::vector<double>{0.5, 0.0, 0.0, 0.5});
  CHECK(diag.rows() == 2);
  CHECK(diag.cols() == 2);
  CHECK(diag.cell(1, 1) == 0.5);

  auto const same = joint_from_conditional(ProbabilityVector(std::vector<double>{0.3, 0.7}), {p, p});
  for (std::size_t i = 0; i < 3; ++i)
  {
    CHECK(same.marginal_x()[i] == doctest::Approx(p[i]).epsilon(1e-15));
  }

  CHECK_THROWS_AS(joint_from_conditional(ProbabilityVector::uniform(2), {p}), ArgumentError);
  CHECK_THROWS_AS(joint_from_conditional(ProbabilityVector::uniform(2), {p, ProbabilityVector::uniform(2)}),
                  ArgumentError);
}

TEST_CASE("joint marginals")
{
  testing::Spacings rng(13);
  for (int t = 0; t < 500; ++t)
  {
    std::size_t const              m = rng.size(1, 4);
    std::size_t const              n = rng.size(1, 5);
    std::vector<ProbabilityVector> rows;
    for (std::size_t j = 0; j < m; ++j)
    {
      rows.push_back(rng.sparse_point(n));
    }
    auto const prior = rng.sparse_point(m);
    auto const joint = joint_from_conditional(prior, rows);
    auto const mix   = mixture(prior, rows);
    auto const px    = joint.marginal_x();
    for (std::size_t i = 0; i < n; ++i)
    {
      CHECK(std::abs(px[i] - mix[i]) <= 1e-15);
    }
    CHECK(joint.marginal_y() == prior);

    auto const swapped = joint.swapped();
    CHECK(swapped.rows() == n);
    CHECK(swapped.cols() == m);
    for (std::size_t y = 0; y < m; ++y)
    {
      for (std::size_t x = 0; x < n; ++x)
      {
        CHECK(std::abs(swapped.cell(x, y) - joint.cell(y, x)) <= 1e-15);
      }
    }
  }
}
