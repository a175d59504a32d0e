#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "naef/rng.hpp"
#include "naef/solver.hpp"

namespace naef {

TemperatureLadder TemperatureLadder::geometric(size_t replicas, double beta_min,
                                               double beta_max) {
  if (replicas < 2)
    throw std::invalid_argument("TemperatureLadder: need at least 2 replicas");
  if (!(beta_min > 0.0) || !(beta_min < beta_max))
    throw std::invalid_argument("TemperatureLadder: need 0 < beta_min < beta_max");
  TemperatureLadder ladder;
  ladder.betas.resize(replicas);
  const double ratio = beta_max / beta_min;
  for (size_t i = 0; i < replicas; ++i)
    ladder.betas[i] =
        beta_min * std::pow(ratio, static_cast<double>(i) / (replicas - 1));
  ladder.betas.back() = beta_max;
  return ladder;
}

TemperatureLadder default_ladder() {
  return TemperatureLadder::geometric(kDefaultPtReplicas, kDefaultPtBetaMin,
                                      kDefaultPtBetaMax);
}

double pt_swap_acceptance(double beta_i, double beta_j, double energy_i,
                          double energy_j) {
  return std::min(1.0, std::exp((beta_i - beta_j) * (energy_i - energy_j)));
}

namespace {

struct Replica {
  std::vector<uint8_t> values;
  std::vector<uint32_t> num_true;  // true literals per clause (SAT reading)
  uint64_t energy = 0;             // NAE-unsatisfied clause count
};

struct PtProblem {
  const Cnf& f;
  uint32_t k;
  std::vector<uint32_t> lits;       // m*k literals, var*2|negated
  std::vector<uint32_t> occ;        // clause*2|negated per occurrence
  std::vector<uint32_t> occ_start;  // n+1

  explicit PtProblem(const Cnf& formula) : f(formula), k(formula.width) {
    const auto m = static_cast<uint32_t>(f.clauses.size());
    std::vector<uint32_t> counts(f.num_vars, 0);
    lits.reserve(size_t{m} * k);
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
  }

  static uint32_t occ_entry(uint32_t clause_idx, bool negated) {
    return (clause_idx << 1) | static_cast<uint32_t>(negated);
  }

  bool nae_unsat(uint32_t t) const { return t == 0 || t == k; }

  void randomize(Replica& r, Rng& rng) const {
    r.values.resize(f.num_vars);
    for (auto& v : r.values) v = static_cast<uint8_t>(rng.next_u64() & 1);
    const auto m = static_cast<uint32_t>(f.clauses.size());
    r.num_true.assign(m, 0);
    r.energy = 0;
    for (uint32_t ci = 0; ci < m; ++ci) {
      uint32_t t = 0;
      for (uint32_t j = 0; j < k; ++j) {
        const uint32_t lit = lits[size_t{ci} * k + j];
        t += r.values[lit >> 1] != (lit & 1);
      }
      r.num_true[ci] = t;
      if (nae_unsat(t)) ++r.energy;
    }
  }

  int64_t flip_delta(const Replica& r, uint32_t var) const {
    int64_t delta = 0;
    const uint8_t value = r.values[var];
    for (uint32_t e = occ_start[var]; e < occ_start[var + 1]; ++e) {
      const uint32_t ci = occ[e] >> 1;
      const uint32_t t = r.num_true[ci];
      const bool currently_true = value != (occ[e] & 1);
      const uint32_t t_new = currently_true ? t - 1 : t + 1;
      delta += static_cast<int64_t>(nae_unsat(t_new)) -
               static_cast<int64_t>(nae_unsat(t));
    }
    return delta;
  }

  void apply_flip(Replica& r, uint32_t var) {
    r.values[var] ^= 1;
    const uint8_t value = r.values[var];
    for (uint32_t e = occ_start[var]; e < occ_start[var + 1]; ++e) {
      const uint32_t ci = occ[e] >> 1;
      const uint32_t t = r.num_true[ci];
      const uint32_t t_new = value != (occ[e] & 1) ? t + 1 : t - 1;
      r.num_true[ci] = t_new;
      r.energy += static_cast<uint64_t>(nae_unsat(t_new)) -
                  static_cast<uint64_t>(nae_unsat(t));
    }
  }
};

}  // namespace

SolverReport pt_solve(const Cnf& f, const SolverBudget& budget,
                      const TemperatureLadder& ladder) {
  if (ladder.betas.size() < 2)
    throw std::invalid_argument("pt_solve: ladder needs at least 2 temperatures");
  for (size_t i = 0; i + 1 < ladder.betas.size(); ++i)
    if (!(ladder.betas[i] < ladder.betas[i + 1]))
      throw std::invalid_argument("pt_solve: ladder must be strictly increasing");

  const uint64_t max_sweeps =
      budget.max_steps == 0 ? kDefaultPtSweeps : budget.max_steps;
  const size_t num_replicas = ladder.betas.size();

  SolverReport report;
  report.final_cost = UINT64_MAX;

  PtProblem problem(f);
  std::vector<Replica> replicas(num_replicas);

  // Uphill acceptance thresholds per replica, indexed by energy delta.
  size_t max_occ = 1;
  for (uint32_t v = 0; v < f.num_vars; ++v)
    max_occ = std::max<size_t>(max_occ,
                               problem.occ_start[v + 1] - problem.occ_start[v]);
  std::vector<std::vector<double>> accept(num_replicas);
  for (size_t r = 0; r < num_replicas; ++r) {
    accept[r].resize(max_occ + 1);
    for (size_t d = 0; d <= max_occ; ++d)
      accept[r][d] = std::exp(-ladder.betas[r] * static_cast<double>(d));
  }

  for (uint32_t attempt = 0; attempt <= budget.max_restarts; ++attempt) {
    Rng rng(budget.rng_seed + attempt);
    report.restarts_used = attempt;
    for (auto& r : replicas) problem.randomize(r, rng);

    for (auto& r : replicas)
      report.final_cost = std::min(report.final_cost, r.energy);
    for (const auto& r : replicas)
      if (r.energy == 0) {
        report.final_cost = 0;
        report.solution = Assignment(r.values);
        return report;
      }

    for (uint64_t sweep = 0; sweep < max_sweeps; ++sweep) {
      ++report.steps_used;
      for (size_t ri = 0; ri < num_replicas; ++ri) {
        Replica& r = replicas[ri];
        const auto& thresholds = accept[ri];
        for (uint32_t p = 0; p < f.num_vars; ++p) {
          const auto var = static_cast<uint32_t>(rng.next_below(f.num_vars));
          const int64_t delta = problem.flip_delta(r, var);
          if (delta <= 0 ||
              rng.next_double() < thresholds[static_cast<size_t>(delta)]) {
            problem.apply_flip(r, var);
            if (r.energy == 0) {
              report.final_cost = 0;
              report.solution = Assignment(r.values);
              return report;
            }
          }
        }
        report.final_cost = std::min(report.final_cost, r.energy);
      }

      // Swap pass over adjacent ladder pairs.
      for (size_t i = 0; i + 1 < num_replicas; ++i) {
        const double delta = (ladder.betas[i] - ladder.betas[i + 1]) *
                             (static_cast<double>(replicas[i].energy) -
                              static_cast<double>(replicas[i + 1].energy));
        if (delta >= 0.0 || rng.next_double() < std::exp(delta))
          std::swap(replicas[i], replicas[i + 1]);
      }
    }
  }
  return report;
}

SolverReport pt_solve(const Cnf& f, const SolverBudget& budget) {
  return pt_solve(f, budget, default_ladder());
}

}  // namespace naef
