#include "naef/transform.hpp"

#include <stdexcept>

namespace naef {

Cnf to_sat_cnf(const Cnf& f) {
  if (!f.clauses.empty() && f.width < 2)
    throw std::invalid_argument("to_sat_cnf: clause width must be >= 2");
  std::vector<Clause> out;
  out.reserve(f.clauses.size() * 2);
  for (const Clause& c : f.clauses) {
    out.push_back(c);
    out.push_back(complement(c));
  }
  return Cnf(f.num_vars, std::move(out));
}

bool is_penalty_paired(const Cnf& f) {
  if (f.clauses.size() % 2 != 0) return false;
  for (size_t i = 0; i + 1 < f.clauses.size(); i += 2)
    if (complement(f.clauses[i]) != f.clauses[i + 1]) return false;
  return true;
}

}  // namespace naef
