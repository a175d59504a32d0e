#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "naef/cnf.hpp"

using namespace naef;
using namespace naef::test;

TEST_CASE("clause SAT evaluation") {
  const Clause c = make_clause({+1, +2});  // x0 v x1
  CHECK(eval_clause_sat(c, make_assignment({1, 0})));
  CHECK_FALSE(eval_clause_sat(c, make_assignment({0, 0})));

  // x3 v x18 v !x12 v x5 with x3 = 1 is satisfied whatever the rest does.
  const Clause wide = make_clause({+4, +19, -13, +6});
  Rng rng(7);
  for (int trial = 0; trial < 32; ++trial) {
    Assignment a = random_assignment(19, rng);
    a.set(3, true);
    CHECK(eval_clause_sat(wide, a));
  }
}

TEST_CASE("clause NAE evaluation") {
  const Clause c = make_clause({+1, +2});
  CHECK_FALSE(eval_clause_nae(c, make_assignment({1, 1})));
  CHECK(eval_clause_nae(c, make_assignment({1, 0})));
  CHECK_FALSE(eval_clause_nae(c, make_assignment({0, 0})));
}

TEST_CASE("clause evaluation rejects out-of-range variables") {
  const Clause c = make_clause({+1, +3});
  CHECK_THROWS_AS(eval_clause_sat(c, make_assignment({0, 1})), std::out_of_range);
  CHECK_THROWS_AS(eval_clause_nae(c, make_assignment({0, 1})), std::out_of_range);
}

TEST_CASE("cost_nae counts unsatisfied clauses") {
  CHECK(cost_nae(Cnf(3, {}), make_assignment({0, 1, 0})) == 0);

  // (x0 v x1) all-true is NAE-unsat; (!x0 v x1) is mixed, hence satisfied.
  const Cnf f = make_cnf(2, {{+1, +2}, {-1, +2}});
  CHECK(cost_nae(f, make_assignment({1, 1})) == 1);
  CHECK(cost_nae(make_cnf(2, {{+1, +2}}), make_assignment({0, 1})) == 0);

  CHECK_THROWS_AS(cost_nae(f, make_assignment({1, 1, 0})), std::invalid_argument);
}

TEST_CASE("cnf construction validates invariants") {
  CHECK_THROWS_AS(make_cnf(2, {{+1, +3}}), std::invalid_argument);  // var out of range
  CHECK_THROWS_AS(make_cnf(2, {{+1, -1}}), std::invalid_argument);  // repeated variable
  CHECK_THROWS_AS(make_cnf(3, {{+1, +2}, {+1, +2, +3}}), std::invalid_argument);
  const Cnf f = make_cnf(3, {{+1, +2, +3}});
  CHECK(f.width == 3);
  CHECK(f.alpha() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("brute force NAE oracle") {
  const auto xor2 = brute_force_nae_solutions(make_cnf(2, {{+1, +2}}));
  REQUIRE(xor2.size() == 2);
  CHECK(xor2[0] == make_assignment({1, 0}));  // pattern 1 = x0 set
  CHECK(xor2[1] == make_assignment({0, 1}));  // pattern 2 = x1 set

  const auto vacuous = brute_force_nae_solutions(Cnf(1, {}));
  CHECK(vacuous.size() == 2);

  // One width-3 clause: everything except all-false and all-true.
  const auto six = brute_force_nae_solutions(make_cnf(3, {{+1, +2, +3}}));
  CHECK(six.size() == 6);

  Cnf too_big(kBruteForceMaxVars + 1, {});
  CHECK_THROWS_AS(brute_force_nae_solutions(too_big), std::invalid_argument);
}

TEST_CASE("NAE implies SAT and is complement-invariant") {
  Rng rng(123);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto n = static_cast<uint32_t>(2 + rng.next_below(10));
    const auto k = static_cast<uint32_t>(2 + rng.next_below(std::min(n, 5u) - 1));
    const Cnf f = random_cnf(n, 1, k, rng);
    const Assignment a = random_assignment(n, rng);
    const Clause& c = f.clauses.front();
    if (eval_clause_nae(c, a)) CHECK(eval_clause_sat(c, a));
    CHECK(eval_clause_nae(c, a) == eval_clause_nae(c, a.complemented()));
  }
}

TEST_CASE("brute force output is closed under complement") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<uint32_t>(3 + rng.next_below(8));
    const Cnf f = random_cnf(n, n, 3, rng);
    const auto sols = brute_force_nae_solutions(f);
    for (const Assignment& a : sols) {
      const Assignment flipped = a.complemented();
      bool found = false;
      for (const Assignment& b : sols) found |= b == flipped;
      CHECK(found);
    }
  }
}

TEST_CASE("hamming distance") {
  CHECK(hamming_distance(make_assignment({0, 1, 1}), make_assignment({1, 1, 0})) == 2);
  CHECK_THROWS_AS(hamming_distance(make_assignment({0}), make_assignment({0, 1})),
                  std::invalid_argument);
}
