#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "naef/filter.hpp"
#include "naef/hash.hpp"

namespace naef {

// Classic Bloom filter baseline. Bit positions come from independently
// seeded digests (seeds base_seed .. base_seed + j - 1), one per hash
// index. Benchmark-only; never serialized.
class BloomFilter {
 public:
  BloomFilter(uint64_t n_bits, uint32_t num_hashes, HashSpec spec);

  void insert(std::string_view key);
  QueryResult query(std::string_view key) const;

  uint64_t size_bits() const { return n_bits_; }
  uint32_t num_hashes() const { return num_hashes_; }
  uint64_t popcount() const;

 private:
  uint64_t position(std::string_view key, uint32_t index) const;

  uint64_t n_bits_;
  uint32_t num_hashes_;
  HashSpec spec_;
  std::vector<uint64_t> words_;
};

// Memory efficiency -log2(fpr) / (n/m); throws std::domain_error unless
// 0 < fpr < 1.
double bloom_efficiency(double measured_fpr, uint64_t n_bits, uint64_t m);

// Standard closed form (1 - e^{-jm/n})^j.
double bloom_fpr_theory(uint64_t n_bits, uint64_t m, uint32_t j);

// Hash count minimizing the theoretical FPR: round(n/m * ln 2), >= 1.
uint32_t bloom_optimal_hashes(uint64_t n_bits, uint64_t m);

}  // namespace naef
