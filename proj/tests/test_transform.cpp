#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "naef/transform.hpp"

using namespace naef;
using namespace naef::test;

TEST_CASE("penalty clause follows its source") {
  const Cnf f = make_cnf(19, {{+4, +19, -13, +6}});
  const Cnf g = to_sat_cnf(f);
  REQUIRE(g.clauses.size() == 2);
  CHECK(g.clauses[0] == make_clause({+4, +19, -13, +6}));
  CHECK(g.clauses[1] == make_clause({-4, -19, +13, -6}));
  CHECK(g.num_vars == f.num_vars);
}

TEST_CASE("empty formula maps to empty formula") {
  const Cnf g = to_sat_cnf(Cnf(5, {}));
  CHECK(g.clauses.empty());
  CHECK(g.num_vars == 5);
}

TEST_CASE("SAT solutions of the encoding are the NAE solutions") {
  const Cnf f = make_cnf(2, {{+1, +2}});
  const auto sat = enumerate_sat_solutions(to_sat_cnf(f));
  REQUIRE(sat.size() == 2);
  CHECK(sat[0] == make_assignment({1, 0}));
  CHECK(sat[1] == make_assignment({0, 1}));

  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<uint32_t>(3 + rng.next_below(10));
    const auto k = static_cast<uint32_t>(2 + rng.next_below(std::min(n, 4u) - 1));
    const auto m = static_cast<uint32_t>(1 + rng.next_below(2 * n));
    const Cnf g = random_cnf(n, m, k, rng);
    CHECK(enumerate_sat_solutions(to_sat_cnf(g)) == brute_force_nae_solutions(g));
  }
}

TEST_CASE("clause count doubles, variables unchanged") {
  Rng rng(8);
  const Cnf f = random_cnf(30, 17, 4, rng);
  const Cnf g = to_sat_cnf(f);
  CHECK(g.clauses.size() == 2 * f.clauses.size());
  CHECK(g.num_vars == f.num_vars);
}

TEST_CASE("is_penalty_paired") {
  Rng rng(9);
  const Cnf f = random_cnf(12, 9, 3, rng);
  CHECK(is_penalty_paired(to_sat_cnf(f)));
  CHECK_FALSE(is_penalty_paired(make_cnf(2, {{+1, +2}})));             // odd count
  CHECK_FALSE(is_penalty_paired(make_cnf(2, {{+1, +2}, {+1, -2}})));   // not complements
}

TEST_CASE("width-1 formulas are rejected") {
  CHECK_THROWS_AS(to_sat_cnf(make_cnf(1, {{+1}})), std::invalid_argument);
}
