#include "naef/collect.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

#include "naef/rng.hpp"
#include "naef/transform.hpp"

namespace naef {

namespace {

std::optional<Assignment> run_attempt(const Cnf& nae_cnf, const Cnf& sat_cnf,
                                      EngineKind engine,
                                      const SolverBudget& per_solve,
                                      uint64_t base_seed, uint64_t attempt) {
  SolverBudget budget = per_solve;
  budget.rng_seed = mix64(base_seed + 2 * attempt);

  SolverReport report;
  if (engine == EngineKind::parallel_tempering)
    report = pt_solve(nae_cnf, budget);
  else
    report = walksat_solve(sat_cnf, budget);
  if (!report.solution) return std::nullopt;

  Assignment a = std::move(*report.solution);
  if (cost_nae(nae_cnf, a) != 0) return std::nullopt;  // distrust solver internals

  // Complement coin, a pure function of (base_seed, attempt).
  if (mix64(base_seed + 2 * attempt + 1) & 1) a = a.complemented();
  return a;
}

uint32_t folded_distance(const Assignment& a, const Assignment& b) {
  const uint32_t d = hamming_distance(a, b);
  return std::min(d, a.size() - d);
}

}  // namespace

std::vector<Assignment> collect_solutions(const Cnf& f, uint32_t s,
                                          uint64_t base_seed, EngineKind engine,
                                          const SolverBudget& per_solve,
                                          double min_hamming_frac,
                                          unsigned max_threads) {
  if (s < 1) throw std::invalid_argument("collect_solutions: s must be >= 1");
  if (min_hamming_frac < 0.0 || min_hamming_frac > 0.5)
    throw std::invalid_argument(
        "collect_solutions: min_hamming_frac must be in [0, 0.5]");

  const Cnf sat_cnf =
      engine == EngineKind::walksat ? to_sat_cnf(f) : Cnf{};
  const auto min_distance = static_cast<uint32_t>(
      std::ceil(min_hamming_frac * static_cast<double>(f.num_vars)));
  const uint64_t max_attempts = kCollectAttemptFactor * s + 16;

  unsigned workers = max_threads != 0 ? max_threads
                                      : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<uint64_t>(workers, std::max<uint64_t>(1, max_attempts)));

  std::vector<Assignment> accepted;
  accepted.reserve(s);

  const auto consider = [&](Assignment&& a) {
    for (const Assignment& prev : accepted) {
      if (prev == a) return;
      if (min_distance > 0 && folded_distance(prev, a) < min_distance) return;
    }
    accepted.push_back(std::move(a));
  };

  uint64_t attempt = 0;
  while (accepted.size() < s && attempt < max_attempts) {
    // One wave of speculative attempts, merged in attempt order so the
    // outcome does not depend on the worker count.
    const auto wave = static_cast<unsigned>(
        std::min<uint64_t>(workers, max_attempts - attempt));
    std::vector<std::optional<Assignment>> results(wave);
    if (wave == 1) {
      results[0] =
          run_attempt(f, sat_cnf, engine, per_solve, base_seed, attempt);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(wave);
      for (unsigned w = 0; w < wave; ++w)
        pool.emplace_back([&, w] {
          results[w] = run_attempt(f, sat_cnf, engine, per_solve, base_seed,
                                   attempt + w);
        });
      for (auto& t : pool) t.join();
    }
    for (unsigned w = 0; w < wave && accepted.size() < s; ++w)
      if (results[w]) consider(std::move(*results[w]));
    attempt += wave;
  }

  if (accepted.size() < s)
    throw collect_error("collect_solutions: accepted " +
                            std::to_string(accepted.size()) + " of " +
                            std::to_string(s) + " solutions after " +
                            std::to_string(attempt) + " attempts",
                        std::move(accepted), attempt);
  return accepted;
}

}  // namespace naef
