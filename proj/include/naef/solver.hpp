#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "naef/cnf.hpp"

namespace naef {

// max_steps caps one try (flips for WalkSAT, sweeps for tempering);
// the solver runs up to max_restarts + 1 tries, each from a fresh
// uniform random assignment seeded with rng_seed + try index.
struct SolverBudget {
  uint64_t max_steps = 0;  // 0 selects the engine default
  uint32_t max_restarts = 0;
  uint64_t rng_seed = 0;
};

struct SolverReport {
  std::optional<Assignment> solution;  // present iff final_cost == 0
  uint64_t steps_used = 0;             // total across tries
  uint32_t restarts_used = 0;
  uint64_t final_cost = 0;             // best cost seen
};

inline constexpr double kDefaultWalksatNoise = 0.567;
inline constexpr uint64_t kDefaultWalksatFlips = 20'000'000;
inline constexpr uint32_t kDefaultWalksatRestarts = 9;
inline constexpr uint64_t kDefaultPtSweeps = 3'000;
inline constexpr uint32_t kDefaultPtRestarts = 2;

// Stochastic local search over a plain SAT CNF. Per flip: pick a
// uniformly random unsatisfied clause; with probability `noise` flip a
// uniform literal of it, otherwise flip the literal with minimal break
// count (ties broken uniformly at random). Deterministic given rng_seed.
SolverReport walksat_solve(const Cnf& f, const SolverBudget& budget,
                           double noise = kDefaultWalksatNoise);

// Ascending inverse temperatures; energy unit is one NAE-unsatisfied clause.
struct TemperatureLadder {
  std::vector<double> betas;

  static TemperatureLadder geometric(size_t replicas, double beta_min,
                                     double beta_max);
};

inline constexpr size_t kDefaultPtReplicas = 16;
inline constexpr double kDefaultPtBetaMin = 0.1;
inline constexpr double kDefaultPtBetaMax = 5.0;

TemperatureLadder default_ladder();

// Replica-swap acceptance probability min(1, exp[(beta_i - beta_j)(E_i - E_j)]).
double pt_swap_acceptance(double beta_i, double beta_j, double energy_i,
                          double energy_j);

// Parallel tempering Monte Carlo over the NAE cost function (number of
// NAE-unsatisfied clauses; no penalty encoding needed). One step = one
// sweep of n single-variable Metropolis proposals per replica followed
// by one swap pass over adjacent ladder pairs. Deterministic given
// rng_seed; replicas are time-sliced on one RNG stream.
SolverReport pt_solve(const Cnf& f, const SolverBudget& budget,
                      const TemperatureLadder& ladder);

SolverReport pt_solve(const Cnf& f, const SolverBudget& budget);

enum class EngineKind : uint16_t {
  walksat = 1,
  parallel_tempering = 2,
  imported = 3,
};

// Engine-appropriate default budget with the given seed.
SolverBudget default_budget(EngineKind engine, uint64_t rng_seed);

}  // namespace naef
