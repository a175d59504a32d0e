#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "naef/cnf.hpp"
#include "naef/solver.hpp"

namespace naef {

// Raised when the attempt budget runs out before `s` solutions are
// accepted; carries whatever was found so the caller can retry with a
// larger budget or a smaller s.
class collect_error : public std::runtime_error {
 public:
  collect_error(std::string msg, std::vector<Assignment> partial,
                uint64_t attempts)
      : std::runtime_error(std::move(msg)),
        partial_solutions(std::move(partial)),
        attempts_used(attempts) {}

  std::vector<Assignment> partial_solutions;
  uint64_t attempts_used;
};

// Attempt cap: collection gives up after kCollectAttemptFactor * s + 16
// solver attempts (each attempt is one full solver run under `per_solve`).
inline constexpr uint64_t kCollectAttemptFactor = 4;

// Collects s NAE solutions of f. Each attempt solves with an independent
// sub-seed of base_seed; the found assignment is globally complemented
// with probability 1/2 (valid because NAE satisfaction is invariant under
// the global bit-flip). Exact duplicates of already-accepted solutions
// are rejected, as are candidates whose complement-folded Hamming
// distance min(d, n-d) to any accepted solution is below
// min_hamming_frac * n. Rejected or failed attempts move on to the next
// sub-seed, so the result is deterministic given base_seed and
// independent of max_threads (attempts may run speculatively in
// parallel but are merged in attempt order).
//
// With engine == walksat the formula is penalty-encoded internally; with
// parallel_tempering it is solved under NAE semantics directly. Every
// accepted assignment is re-verified to cost_nae == 0.
std::vector<Assignment> collect_solutions(const Cnf& f, uint32_t s,
                                          uint64_t base_seed, EngineKind engine,
                                          const SolverBudget& per_solve,
                                          double min_hamming_frac = 0.0,
                                          unsigned max_threads = 0);

}  // namespace naef
