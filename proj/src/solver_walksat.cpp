#include <cassert>
#include <cstdint>
#include <vector>

#include "naef/rng.hpp"
#include "naef/solver.hpp"

namespace naef {

namespace {

// Occurrence entry: clause index in the high bits, literal sign in bit 0.
inline uint32_t occ_entry(uint32_t clause_idx, bool negated) {
  return (clause_idx << 1) | static_cast<uint32_t>(negated);
}

struct SearchState {
  const Cnf& f;
  uint32_t k;
  std::vector<uint32_t> lits;        // m*k literals, var*2|negated
  std::vector<uint32_t> occ;         // CSR payload of occ_entry values
  std::vector<uint32_t> occ_start;   // n+1 offsets into occ

  std::vector<uint8_t> values;       // current assignment
  std::vector<uint32_t> num_true;    // true literals per clause
  std::vector<uint32_t> unsat;       // stack of unsatisfied clause indices
  std::vector<uint32_t> unsat_pos;   // clause -> position in unsat, or npos

  static constexpr uint32_t npos = UINT32_MAX;

  explicit SearchState(const Cnf& formula) : f(formula), k(formula.width) {
    const auto m = static_cast<uint32_t>(f.clauses.size());
    lits.reserve(size_t{m} * k);
    std::vector<uint32_t> counts(f.num_vars, 0);
    for (const Clause& c : f.clauses)
      for (const Literal& l : c.literals) {
        lits.push_back(l.var * 2 + (l.negated ? 1 : 0));
        ++counts[l.var];
      }
    occ_start.assign(f.num_vars + 1, 0);
    for (uint32_t v = 0; v < f.num_vars; ++v)
      occ_start[v + 1] = occ_start[v] + counts[v];
    occ.resize(occ_start.back());
    std::vector<uint32_t> cursor(occ_start.begin(), occ_start.end() - 1);
    for (uint32_t ci = 0; ci < m; ++ci)
      for (const Literal& l : f.clauses[ci].literals)
        occ[cursor[l.var]++] = occ_entry(ci, l.negated);

    values.resize(f.num_vars);
    num_true.resize(m);
    unsat_pos.resize(m);
  }

  void randomize(Rng& rng) {
    for (auto& v : values) v = static_cast<uint8_t>(rng.next_u64() & 1);
    const auto m = static_cast<uint32_t>(f.clauses.size());
    unsat.clear();
    for (uint32_t ci = 0; ci < m; ++ci) {
      uint32_t t = 0;
      for (uint32_t j = 0; j < k; ++j) {
        const uint32_t lit = lits[size_t{ci} * k + j];
        t += values[lit >> 1] != (lit & 1);
      }
      num_true[ci] = t;
      if (t == 0) {
        unsat_pos[ci] = static_cast<uint32_t>(unsat.size());
        unsat.push_back(ci);
      } else {
        unsat_pos[ci] = npos;
      }
    }
  }

  void flip(uint32_t var) {
    values[var] ^= 1;
    const uint8_t value = values[var];
    for (uint32_t e = occ_start[var]; e < occ_start[var + 1]; ++e) {
      const uint32_t ci = occ[e] >> 1;
      const bool now_true = value != (occ[e] & 1);
      if (now_true) {
        if (num_true[ci]++ == 0) {
          // Clause leaves the unsatisfied stack; swap-remove.
          const uint32_t pos = unsat_pos[ci];
          const uint32_t last = unsat.back();
          unsat[pos] = last;
          unsat_pos[last] = pos;
          unsat.pop_back();
          unsat_pos[ci] = npos;
        }
      } else {
        if (--num_true[ci] == 0) {
          unsat_pos[ci] = static_cast<uint32_t>(unsat.size());
          unsat.push_back(ci);
        }
      }
    }
  }

  // Number of clauses that become unsatisfied if `var` flips: those where
  // var's literal is currently the only true one.
  uint32_t break_count(uint32_t var) const {
    uint32_t breaks = 0;
    for (uint32_t e = occ_start[var]; e < occ_start[var + 1]; ++e) {
      const uint32_t ci = occ[e] >> 1;
      if (num_true[ci] == 1 && values[var] != (occ[e] & 1)) ++breaks;
    }
    return breaks;
  }

  Assignment assignment() const { return Assignment(values); }
};

}  // namespace

SolverReport walksat_solve(const Cnf& f, const SolverBudget& budget,
                           double noise) {
  const uint64_t max_flips =
      budget.max_steps == 0 ? kDefaultWalksatFlips : budget.max_steps;

  SolverReport report;
  report.final_cost = UINT64_MAX;

  SearchState state(f);
  std::vector<uint32_t> ties;
  ties.reserve(f.width);

  for (uint32_t attempt = 0; attempt <= budget.max_restarts; ++attempt) {
    Rng rng(budget.rng_seed + attempt);
    state.randomize(rng);
    report.restarts_used = attempt;

    uint64_t best = state.unsat.size();
    for (uint64_t flips = 0; !state.unsat.empty() && flips < max_flips; ++flips) {
      const uint32_t ci = state.unsat[rng.next_below(state.unsat.size())];
      const uint32_t* clause_lits = &state.lits[size_t{ci} * state.k];

      uint32_t var;
      if (rng.coin(noise)) {
        var = clause_lits[rng.next_below(state.k)] >> 1;
      } else {
        uint32_t best_break = UINT32_MAX;
        ties.clear();
        for (uint32_t j = 0; j < state.k; ++j) {
          const uint32_t v = clause_lits[j] >> 1;
          const uint32_t b = state.break_count(v);
          if (b < best_break) {
            best_break = b;
            ties.clear();
            ties.push_back(v);
          } else if (b == best_break) {
            ties.push_back(v);
          }
        }
        var = ties.size() == 1 ? ties[0] : ties[rng.next_below(ties.size())];
      }

      state.flip(var);
      ++report.steps_used;
      if (state.unsat.size() < best) best = state.unsat.size();
    }

    if (best < report.final_cost) report.final_cost = best;
    if (state.unsat.empty()) {
      report.final_cost = 0;
      report.solution = state.assignment();
      return report;
    }
  }
  return report;
}

SolverBudget default_budget(EngineKind engine, uint64_t rng_seed) {
  switch (engine) {
    case EngineKind::parallel_tempering:
      return {kDefaultPtSweeps, kDefaultPtRestarts, rng_seed};
    default:
      return {kDefaultWalksatFlips, kDefaultWalksatRestarts, rng_seed};
  }
}

}  // namespace naef
