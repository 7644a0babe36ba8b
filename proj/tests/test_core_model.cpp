#include <doctest.h>

#include <cmath>

#include "dynas/core_model.hpp"

using namespace dynas;

TEST_CASE("target grid endpoints and monotonicity") {
  TargetGrid grid;
  CHECK(grid.size() == 51);
  CHECK(grid.value(0) == doctest::Approx(1e2).epsilon(1e-15));
  CHECK(grid.value(50) == doctest::Approx(1e-8).epsilon(1e-15));
  CHECK(grid.value(6) == doctest::Approx(std::pow(10.0, 0.8)).epsilon(1e-15));
  for (int i = 0; i + 1 < grid.size(); ++i)
    CHECK(grid.value(i) > grid.value(i + 1));
}

TEST_CASE("exponent arithmetic is exact in tenths") {
  TargetGrid grid;
  for (int i = 0; i <= 50; ++i)
    CHECK(grid.exponent_tenths(i) == 20 - 2 * i);  // integer identity
}

TEST_CASE("index out of range throws") {
  TargetGrid grid;
  CHECK_THROWS_AS(grid.value(-1), std::out_of_range);
  CHECK_THROWS_AS(grid.value(51), std::out_of_range);
}

TEST_CASE("nearest index examples") {
  TargetGrid grid;
  CHECK(grid.nearest_index(std::pow(10.0, 1.2)) == 4);
  CHECK(grid.nearest_index(1e-8) == 50);
  // 10^0.9 is equidistant between exponents 1.0 (i=5) and 0.8 (i=6)
  CHECK(grid.nearest_index(std::pow(10.0, 0.9)) == 5);
  CHECK_THROWS_AS(grid.nearest_index(0.0), std::domain_error);
  CHECK_THROWS_AS(grid.nearest_index(-1.0), std::domain_error);
}

TEST_CASE("nearest index round-trips every grid value") {
  TargetGrid grid;
  for (int i = 0; i < grid.size(); ++i)
    CHECK(grid.nearest_index(grid.value(i)) == i);
}

TEST_CASE("custom grid keeps the same invariants") {
  TargetGrid grid(11, 0, 10);  // 1e0 down to 1e-10 in whole decades
  CHECK(grid.value(0) == doctest::Approx(1.0));
  CHECK(grid.final_target() == doctest::Approx(1e-10));
  CHECK(grid.nearest_index(grid.value(7)) == 7);
}

TEST_CASE("run trace repairs monotonicity and clamps below zero") {
  auto t = RunTrace::from_points(
      1, {{1, 1.0}, {5, 2.0}, {9, 1e-3}, {12, -4.0}});
  REQUIRE(t.points().size() == 4);
  CHECK(t.points()[1].best_precision == 1.0);  // running minimum
  CHECK(t.points()[2].best_precision == 1e-3);
  CHECK(t.points()[3].best_precision == 0.0);  // clamped
  CHECK(t.budget() == 12);
}

TEST_CASE("run trace keeps last precision at duplicate eval counts") {
  auto t = RunTrace::from_points(1, {{1, 5.0}, {10, 2.0}, {10, 1.0}});
  REQUIRE(t.points().size() == 2);
  CHECK(t.points()[1].evals == 10);
  CHECK(t.points()[1].best_precision == 1.0);
}

TEST_CASE("run trace rejects decreasing evals and bad budgets") {
  CHECK_THROWS_AS(RunTrace::from_points(1, {{5, 1.0}, {3, 0.5}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RunTrace::from_points(1, {{0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(RunTrace::from_points(1, {}, 0), std::invalid_argument);
  // explicit budget below the last eval is raised to it
  auto t = RunTrace::from_points(1, {{1, 1.0}, {30, 0.5}}, 10);
  CHECK(t.budget() == 30);
}

TEST_CASE("problem key validation") {
  CHECK(is_valid_problem({1, 5}));
  CHECK(is_valid_problem({24, 40}));
  CHECK_FALSE(is_valid_problem({0, 5}));
  CHECK_FALSE(is_valid_problem({25, 5}));
  CHECK_FALSE(is_valid_problem({1, 7}));
  CHECK(is_valid_problem({1, 7}, {7}));  // custom dimension set
}

TEST_CASE("ert value constructors enforce invariants") {
  CHECK_THROWS_AS(ErtValue::make_finite(10.0, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(ErtValue::make_finite(0.5, 1, 3), std::invalid_argument);
  auto v = ErtValue::make_finite(40.0, 2, 3);
  CHECK(v.finite);
  CHECK(v.ert == 40.0);
  CHECK_FALSE(ErtValue::never_hit(3).finite);
}
