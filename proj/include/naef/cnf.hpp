#pragma once

#include <cstdint>
#include <vector>

namespace naef {

// A literal is a variable index plus a sign. Variables are 0-indexed
// everywhere except at the DIMACS boundary.
struct Literal {
  uint32_t var = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal complement(Literal l) { return {l.var, !l.negated}; }

struct Clause {
  std::vector<Literal> literals;

  uint32_t width() const { return static_cast<uint32_t>(literals.size()); }

  friend bool operator==(const Clause&, const Clause&) = default;
};

Clause complement(const Clause& c);

// A truth assignment over n variables, one byte per variable (0 or 1).
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(uint32_t n) : bits_(n, 0) {}
  explicit Assignment(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (auto& b : bits_) b = b ? 1 : 0;
  }

  uint32_t size() const { return static_cast<uint32_t>(bits_.size()); }
  bool bit(uint32_t i) const { return bits_[i] != 0; }
  void set(uint32_t i, bool v) { bits_[i] = v ? 1 : 0; }
  void flip(uint32_t i) { bits_[i] ^= 1; }
  const std::vector<uint8_t>& raw() const { return bits_; }

  Assignment complemented() const {
    Assignment out = *this;
    for (auto& b : out.bits_) b ^= 1;
    return out;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<uint8_t> bits_;
};

uint32_t hamming_distance(const Assignment& a, const Assignment& b);

// Fixed-width CNF formula. All clauses share the same width; every
// clause has pairwise-distinct variables below num_vars. Instances are
// immutable after construction, so evaluation is safe from any thread.
struct Cnf {
  uint32_t num_vars = 0;
  uint32_t width = 0;  // uniform clause width k; 0 for an empty formula
  std::vector<Clause> clauses;

  Cnf() = default;
  // Validates the invariants above; throws std::invalid_argument.
  Cnf(uint32_t n, std::vector<Clause> cls);

  uint64_t num_clauses() const { return clauses.size(); }
  double alpha() const {
    return num_vars == 0 ? 0.0 : static_cast<double>(clauses.size()) / num_vars;
  }
};

// Plain SAT: at least one literal true.
bool eval_clause_sat(const Clause& c, const Assignment& a);

// Not-all-equal: at least one literal true and at least one false.
// Meaningful for width >= 2; a unit clause is never NAE-satisfied.
bool eval_clause_nae(const Clause& c, const Assignment& a);

// Number of NAE-unsatisfied clauses; 0 iff `a` is a valid NAE solution.
uint64_t cost_nae(const Cnf& f, const Assignment& a);

bool satisfies_sat(const Cnf& f, const Assignment& a);

// Exhaustive enumeration cap: 2^24 assignments keeps the oracle usable
// in property tests without runaway runtime.
inline constexpr uint32_t kBruteForceMaxVars = 24;

// All assignments with cost_nae == 0, ascending by bit pattern
// (variable 0 is the least significant bit). Throws std::invalid_argument
// if f.num_vars exceeds kBruteForceMaxVars.
std::vector<Assignment> brute_force_nae_solutions(const Cnf& f);

}  // namespace naef
