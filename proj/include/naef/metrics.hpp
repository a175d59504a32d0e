#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>

#include "naef/bloom.hpp"
#include "naef/filter.hpp"
#include "naef/rng.hpp"

namespace naef {

// (1 - 2^-k)^s: chance that a random clause is SAT-satisfied by each of
// s independent solutions. Computed in log space.
double fpr_theory_sat(uint32_t k, uint32_t s);

// (1 - 2^-(k-1))^s, the NAE-querying counterpart. Requires k >= 2.
double fpr_theory_nae(uint32_t k, uint32_t s);

// -log2(fpr) / (s * n / m): filter bits of information per stored bit
// per key. With fpr at its theoretical value the s-dependence cancels.
double efficiency(double fpr, uint64_t n, uint32_t s, uint64_t m);

// Smallest s with fpr_theory(k, s) <= target_fpr.
uint32_t required_solutions(uint32_t k, double target_fpr, bool nae);

struct FprEstimate {
  double estimate = 0.0;
  double stderr_value = 0.0;
  double ci_lo = 0.0;  // Wilson 95% interval
  double ci_hi = 0.0;
  uint64_t trials = 0;
  uint64_t positives = 0;

  double ci_half_width() const { return (ci_hi - ci_lo) / 2.0; }
};

// An 8-byte key, little-endian, drawn uniformly. The benchmark workload
// queries 64-bit strings.
std::string random_key8(Rng& rng);

// Maybe-rate over `trials` uniform random 8-byte keys not in `members`.
// Deterministic given rng_seed.
FprEstimate measure_fpr_fn(const std::function<QueryResult(std::string_view)>& probe,
                           uint64_t trials, uint64_t rng_seed,
                           const std::unordered_set<std::string>& members);

FprEstimate measure_fpr(const NaeSatFilter& filter, uint64_t trials,
                        uint64_t rng_seed,
                        const std::unordered_set<std::string>& members,
                        QuerySemantics semantics = QuerySemantics::nae);

FprEstimate measure_fpr(const BloomFilter& filter, uint64_t trials,
                        uint64_t rng_seed,
                        const std::unordered_set<std::string>& members);

struct HammingStats {
  double mean = 0.0;          // mean pairwise distance
  uint32_t min = 0;
  uint32_t max = 0;
  double folded_mean = 0.0;   // mean of min(d, n - d) over pairs
};

// Pairwise Hamming statistics over >= 2 equal-length assignments.
HammingStats hamming_stats(std::span<const Assignment> solutions);

}  // namespace naef
