#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "naef/solver.hpp"
#include "naef/transform.hpp"

using namespace naef;
using namespace naef::test;

TEST_CASE("walksat solves the 2-variable NAE encoding") {
  const Cnf f = make_cnf(2, {{+1, +2}, {-1, -2}});
  const SolverReport report = walksat_solve(f, {1000, 0, 1});
  REQUIRE(report.solution.has_value());
  CHECK(report.final_cost == 0);
  CHECK(satisfies_sat(f, *report.solution));
  const bool is01 = *report.solution == make_assignment({0, 1});
  const bool is10 = *report.solution == make_assignment({1, 0});
  CHECK((is01 || is10));
}

TEST_CASE("walksat reports failure on unsatisfiable input") {
  const Cnf f = make_cnf(1, {{+1}, {-1}});
  const SolverReport report = walksat_solve(f, {200, 2, 7});
  CHECK_FALSE(report.solution.has_value());
  CHECK(report.final_cost >= 1);
  CHECK(report.steps_used <= 200 * 3);
}

TEST_CASE("walksat is deterministic in the seed") {
  Rng rng(55);
  const Cnf f = to_sat_cnf(random_cnf(40, 80, 3, rng));
  const SolverBudget budget{5000, 2, 99};
  const SolverReport a = walksat_solve(f, budget, 0.5);
  const SolverReport b = walksat_solve(f, budget, 0.5);
  CHECK(a.solution == b.solution);
  CHECK(a.steps_used == b.steps_used);
  CHECK(a.restarts_used == b.restarts_used);
  CHECK(a.final_cost == b.final_cost);
}

TEST_CASE("walksat empty formula is vacuously satisfied") {
  const SolverReport report = walksat_solve(Cnf(3, {}), {100, 0, 0});
  REQUIRE(report.solution.has_value());
  CHECK(report.final_cost == 0);
  CHECK(report.solution->size() == 3);
}

TEST_CASE("walksat solutions verify under sat-core") {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const Cnf nae = random_cnf(60, 120, 3, rng);
    const Cnf f = to_sat_cnf(nae);
    const SolverReport report = walksat_solve(f, {200'000, 2, static_cast<uint64_t>(1000 + trial)});
    if (report.solution) {
      CHECK(satisfies_sat(f, *report.solution));
      CHECK(cost_nae(nae, *report.solution) == 0);
    }
  }
}

TEST_CASE("geometric ladder shape") {
  const TemperatureLadder ladder = TemperatureLadder::geometric(16, 0.1, 5.0);
  REQUIRE(ladder.betas.size() == 16);
  CHECK(ladder.betas.front() == doctest::Approx(0.1));
  CHECK(ladder.betas.back() == doctest::Approx(5.0));
  for (size_t i = 0; i + 1 < ladder.betas.size(); ++i) {
    CHECK(ladder.betas[i] < ladder.betas[i + 1]);
    // Constant ratio between rungs.
    CHECK(ladder.betas[i + 1] / ladder.betas[i] ==
          doctest::Approx(ladder.betas[1] / ladder.betas[0]).epsilon(1e-9));
  }
  CHECK_THROWS_AS(TemperatureLadder::geometric(1, 0.1, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(TemperatureLadder::geometric(4, 5.0, 0.1), std::invalid_argument);
}

TEST_CASE("swap acceptance closed form") {
  // Hot downhill swap is always accepted.
  CHECK(pt_swap_acceptance(1.0, 0.5, 3.0, 1.0) == 1.0);
  // Reversed energies: exp(-1).
  CHECK(pt_swap_acceptance(1.0, 0.5, 1.0, 3.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(pt_swap_acceptance(0.5, 1.0, 3.0, 1.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("pt solves small NAE instances") {
  const Cnf f = make_cnf(2, {{+1, +2}});
  const SolverReport report = pt_solve(f, {50, 0, 3});
  REQUIRE(report.solution.has_value());
  CHECK(cost_nae(f, *report.solution) == 0);

  const TemperatureLadder tiny = TemperatureLadder::geometric(2, 0.5, 2.0);
  const SolverReport small = pt_solve(f, {50, 0, 4}, tiny);
  CHECK(small.solution.has_value());
}

TEST_CASE("pt is deterministic in the seed") {
  Rng rng(66);
  const Cnf f = random_cnf(30, 60, 3, rng);
  const SolverBudget budget{100, 1, 42};
  const SolverReport a = pt_solve(f, budget);
  const SolverReport b = pt_solve(f, budget);
  CHECK(a.solution == b.solution);
  CHECK(a.steps_used == b.steps_used);
  CHECK(a.final_cost == b.final_cost);
}

TEST_CASE("pt solutions verify under sat-core") {
  Rng rng(91);
  for (int trial = 0; trial < 5; ++trial) {
    const Cnf f = random_cnf(50, 150, 3, rng);
    const SolverReport report = pt_solve(f, {300, 1, static_cast<uint64_t>(500 + trial)});
    if (report.solution) CHECK(cost_nae(f, *report.solution) == 0);
  }
}

TEST_CASE("pt ladder validation") {
  const Cnf f = make_cnf(2, {{+1, +2}});
  TemperatureLadder bad;
  bad.betas = {1.0};
  CHECK_THROWS_AS(pt_solve(f, {10, 0, 0}, bad), std::invalid_argument);
  bad.betas = {1.0, 1.0};
  CHECK_THROWS_AS(pt_solve(f, {10, 0, 0}, bad), std::invalid_argument);
}

TEST_CASE("success degrades as alpha approaches the threshold") {
  // k=5, n=200: alpha 4 is far below the satisfiability threshold,
  // alpha 18 is beyond it.
  Rng rng(14);
  int easy_hits = 0;
  int hard_hits = 0;
  for (int seed = 0; seed < 20; ++seed) {
    const Cnf easy = random_cnf(200, 800, 5, rng);
    const Cnf hard = random_cnf(200, 3600, 5, rng);
    const SolverBudget budget{100, 0, static_cast<uint64_t>(seed)};
    easy_hits += pt_solve(easy, budget).solution.has_value();
    hard_hits += pt_solve(hard, budget).solution.has_value();
  }
  CHECK(easy_hits >= hard_hits);
  CHECK(easy_hits >= 19);
  CHECK(hard_hits == 0);
}
