#pragma once

#include <string>
#include <vector>

#include "naef/cnf.hpp"
#include "naef/rng.hpp"

namespace naef::test {

inline Assignment make_assignment(std::initializer_list<int> bits) {
  Assignment a(static_cast<uint32_t>(bits.size()));
  uint32_t i = 0;
  for (int b : bits) a.set(i++, b != 0);
  return a;
}

inline Clause make_clause(std::initializer_list<int> signed_vars) {
  // Positive entry v means variable v; negative entry means its negation.
  // Entry encoding shifts by 1 so variable 0 stays representable: +1 -> x0,
  // -1 -> !x0, +2 -> x1, ...
  Clause c;
  for (int sv : signed_vars) {
    const bool neg = sv < 0;
    const auto var = static_cast<uint32_t>((neg ? -sv : sv) - 1);
    c.literals.push_back(Literal{var, neg});
  }
  return c;
}

inline Cnf make_cnf(uint32_t n, std::initializer_list<std::initializer_list<int>> clauses) {
  std::vector<Clause> cls;
  for (const auto& c : clauses) cls.push_back(make_clause(c));
  return Cnf(n, std::move(cls));
}

// Random uniform-width formula; clause variables pairwise distinct.
inline Cnf random_cnf(uint32_t n, uint32_t m, uint32_t k, Rng& rng) {
  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (uint32_t ci = 0; ci < m; ++ci) {
    Clause c;
    while (c.literals.size() < k) {
      const auto var = static_cast<uint32_t>(rng.next_below(n));
      bool seen = false;
      for (const Literal& l : c.literals) seen |= l.var == var;
      if (seen) continue;
      c.literals.push_back(Literal{var, rng.next_bool()});
    }
    clauses.push_back(std::move(c));
  }
  return Cnf(n, std::move(clauses));
}

inline Assignment random_assignment(uint32_t n, Rng& rng) {
  Assignment a(n);
  for (uint32_t i = 0; i < n; ++i) a.set(i, rng.next_bool());
  return a;
}

// Exhaustive plain-SAT solution enumeration, ascending by bit pattern.
// Independent oracle for the penalty-encoding theorem.
inline std::vector<Assignment> enumerate_sat_solutions(const Cnf& f) {
  std::vector<Assignment> out;
  const uint64_t total = uint64_t{1} << f.num_vars;
  Assignment a(f.num_vars);
  for (uint64_t pattern = 0; pattern < total; ++pattern) {
    for (uint32_t i = 0; i < f.num_vars; ++i) a.set(i, (pattern >> i) & 1);
    if (satisfies_sat(f, a)) out.push_back(a);
  }
  return out;
}

inline std::string testdata_path(const std::string& name) {
  return std::string(NAEF_TESTDATA_DIR) + "/" + name;
}

}  // namespace naef::test
