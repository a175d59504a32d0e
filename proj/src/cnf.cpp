#include "naef/cnf.hpp"

#include <stdexcept>
#include <string>

namespace naef {

Clause complement(const Clause& c) {
  Clause out;
  out.literals.reserve(c.literals.size());
  for (const Literal& l : c.literals) out.literals.push_back(complement(l));
  return out;
}

uint32_t hamming_distance(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("hamming_distance: assignment lengths differ");
  uint32_t d = 0;
  for (uint32_t i = 0; i < a.size(); ++i) d += a.bit(i) != b.bit(i);
  return d;
}

Cnf::Cnf(uint32_t n, std::vector<Clause> cls) : num_vars(n), clauses(std::move(cls)) {
  width = clauses.empty() ? 0 : clauses.front().width();
  for (size_t ci = 0; ci < clauses.size(); ++ci) {
    const Clause& c = clauses[ci];
    if (c.width() != width)
      throw std::invalid_argument("Cnf: clause " + std::to_string(ci) +
                                  " has width " + std::to_string(c.width()) +
                                  ", expected uniform width " + std::to_string(width));
    if (c.width() == 0)
      throw std::invalid_argument("Cnf: empty clause not allowed");
    for (size_t i = 0; i < c.literals.size(); ++i) {
      if (c.literals[i].var >= num_vars)
        throw std::invalid_argument("Cnf: clause " + std::to_string(ci) +
                                    " references variable " +
                                    std::to_string(c.literals[i].var) +
                                    " >= n = " + std::to_string(num_vars));
      for (size_t j = i + 1; j < c.literals.size(); ++j)
        if (c.literals[i].var == c.literals[j].var)
          throw std::invalid_argument("Cnf: clause " + std::to_string(ci) +
                                      " repeats variable " +
                                      std::to_string(c.literals[i].var));
    }
  }
}

namespace {

inline bool literal_true(const Literal& l, const Assignment& a) {
  return a.bit(l.var) != l.negated;
}

inline void check_vars(const Clause& c, const Assignment& a) {
  for (const Literal& l : c.literals)
    if (l.var >= a.size())
      throw std::out_of_range("clause variable " + std::to_string(l.var) +
                              " out of range for assignment of length " +
                              std::to_string(a.size()));
}

}  // namespace

bool eval_clause_sat(const Clause& c, const Assignment& a) {
  check_vars(c, a);
  for (const Literal& l : c.literals)
    if (literal_true(l, a)) return true;
  return false;
}

bool eval_clause_nae(const Clause& c, const Assignment& a) {
  check_vars(c, a);
  bool any_true = false;
  bool any_false = false;
  for (const Literal& l : c.literals) {
    if (literal_true(l, a))
      any_true = true;
    else
      any_false = true;
    if (any_true && any_false) return true;
  }
  return false;
}

uint64_t cost_nae(const Cnf& f, const Assignment& a) {
  if (a.size() != f.num_vars)
    throw std::invalid_argument("cost_nae: assignment length " +
                                std::to_string(a.size()) + " != n = " +
                                std::to_string(f.num_vars));
  uint64_t unsat = 0;
  for (const Clause& c : f.clauses)
    if (!eval_clause_nae(c, a)) ++unsat;
  return unsat;
}

bool satisfies_sat(const Cnf& f, const Assignment& a) {
  if (a.size() != f.num_vars)
    throw std::invalid_argument("satisfies_sat: assignment length mismatch");
  for (const Clause& c : f.clauses)
    if (!eval_clause_sat(c, a)) return false;
  return true;
}

std::vector<Assignment> brute_force_nae_solutions(const Cnf& f) {
  if (f.num_vars > kBruteForceMaxVars)
    throw std::invalid_argument("brute_force_nae_solutions: n = " +
                                std::to_string(f.num_vars) + " exceeds cap " +
                                std::to_string(kBruteForceMaxVars));
  std::vector<Assignment> out;
  const uint64_t total = uint64_t{1} << f.num_vars;
  Assignment a(f.num_vars);
  for (uint64_t pattern = 0; pattern < total; ++pattern) {
    for (uint32_t i = 0; i < f.num_vars; ++i) a.set(i, (pattern >> i) & 1);
    if (cost_nae(f, a) == 0) out.push_back(a);
  }
  return out;
}

}  // namespace naef
