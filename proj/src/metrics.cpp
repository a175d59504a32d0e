#include "naef/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace naef {

namespace {

double fpr_theory(double pass_probability, uint32_t s) {
  // exp2(s * log2(base)) stays finite where pow would underflow early.
  return std::exp2(static_cast<double>(s) * std::log2(pass_probability));
}

}  // namespace

double fpr_theory_sat(uint32_t k, uint32_t s) {
  if (k < 1) throw std::domain_error("fpr_theory_sat: k must be >= 1");
  if (s < 1) throw std::domain_error("fpr_theory_sat: s must be >= 1");
  return fpr_theory(1.0 - std::exp2(-static_cast<double>(k)), s);
}

double fpr_theory_nae(uint32_t k, uint32_t s) {
  if (k < 2) throw std::domain_error("fpr_theory_nae: k must be >= 2");
  if (s < 1) throw std::domain_error("fpr_theory_nae: s must be >= 1");
  return fpr_theory(1.0 - std::exp2(-static_cast<double>(k) + 1.0), s);
}

double efficiency(double fpr, uint64_t n, uint32_t s, uint64_t m) {
  if (!(fpr > 0.0) || !(fpr < 1.0))
    throw std::domain_error("efficiency: fpr must be in (0, 1)");
  if (n < 1 || s < 1 || m < 1)
    throw std::domain_error("efficiency: counts must be >= 1");
  const double stored_bits_per_key =
      static_cast<double>(s) * static_cast<double>(n) / static_cast<double>(m);
  return -std::log2(fpr) / stored_bits_per_key;
}

uint32_t required_solutions(uint32_t k, double target_fpr, bool nae) {
  if (!(target_fpr > 0.0) || !(target_fpr < 1.0))
    throw std::domain_error("required_solutions: target must be in (0, 1)");
  const double base = nae ? 1.0 - std::exp2(-static_cast<double>(k) + 1.0)
                          : 1.0 - std::exp2(-static_cast<double>(k));
  if (nae && k < 2) throw std::domain_error("required_solutions: k must be >= 2");
  if (!nae && k < 1) throw std::domain_error("required_solutions: k must be >= 1");

  // Closed-form estimate, then correct for rounding at the boundary.
  const double raw = std::log(target_fpr) / std::log(base);
  auto s = static_cast<uint32_t>(std::max(1.0, std::ceil(raw)));
  const auto theory = [&](uint32_t count) { return fpr_theory(base, count); };
  while (s > 1 && theory(s - 1) <= target_fpr) --s;
  while (theory(s) > target_fpr) ++s;
  return s;
}

std::string random_key8(Rng& rng) {
  const uint64_t value = rng.next_u64();
  std::string key(8, '\0');
  for (int i = 0; i < 8; ++i)
    key[i] = static_cast<char>((value >> (8 * i)) & 0xff);
  return key;
}

FprEstimate measure_fpr_fn(const std::function<QueryResult(std::string_view)>& probe,
                           uint64_t trials, uint64_t rng_seed,
                           const std::unordered_set<std::string>& members) {
  if (trials < 1) throw std::invalid_argument("measure_fpr: trials must be >= 1");
  Rng rng(rng_seed);
  FprEstimate est;
  est.trials = trials;
  for (uint64_t t = 0; t < trials; ++t) {
    std::string key = random_key8(rng);
    while (members.contains(key)) key = random_key8(rng);
    if (probe(key) == QueryResult::maybe) ++est.positives;
  }

  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(est.positives) / n;
  est.estimate = p;
  est.stderr_value = std::sqrt(p * (1.0 - p) / n);

  const double z = 1.959963984540054;  // two-sided 95%
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  est.ci_lo = center - half;
  est.ci_hi = center + half;
  return est;
}

FprEstimate measure_fpr(const NaeSatFilter& filter, uint64_t trials,
                        uint64_t rng_seed,
                        const std::unordered_set<std::string>& members,
                        QuerySemantics semantics) {
  return measure_fpr_fn(
      [&](std::string_view key) { return query(filter, key, semantics); },
      trials, rng_seed, members);
}

FprEstimate measure_fpr(const BloomFilter& filter, uint64_t trials,
                        uint64_t rng_seed,
                        const std::unordered_set<std::string>& members) {
  return measure_fpr_fn(
      [&](std::string_view key) { return filter.query(key); }, trials,
      rng_seed, members);
}

HammingStats hamming_stats(std::span<const Assignment> solutions) {
  if (solutions.size() < 2)
    throw std::invalid_argument("hamming_stats: need at least 2 solutions");
  const uint32_t n = solutions.front().size();
  for (const Assignment& a : solutions)
    if (a.size() != n)
      throw std::invalid_argument("hamming_stats: solution lengths differ");

  HammingStats stats;
  stats.min = UINT32_MAX;
  uint64_t pairs = 0;
  double sum = 0.0;
  double folded_sum = 0.0;
  for (size_t i = 0; i < solutions.size(); ++i)
    for (size_t j = i + 1; j < solutions.size(); ++j) {
      const uint32_t d = hamming_distance(solutions[i], solutions[j]);
      sum += d;
      folded_sum += std::min(d, n - d);
      stats.min = std::min(stats.min, d);
      stats.max = std::max(stats.max, d);
      ++pairs;
    }
  stats.mean = sum / static_cast<double>(pairs);
  stats.folded_mean = folded_sum / static_cast<double>(pairs);
  return stats;
}

}  // namespace naef
