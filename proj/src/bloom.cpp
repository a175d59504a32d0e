#include "naef/bloom.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace naef {

BloomFilter::BloomFilter(uint64_t n_bits, uint32_t num_hashes, HashSpec spec)
    : n_bits_(n_bits), num_hashes_(num_hashes), spec_(spec),
      words_((n_bits + 63) / 64, 0) {
  if (n_bits < 1) throw std::invalid_argument("BloomFilter: n must be >= 1");
  if (num_hashes < 1) throw std::invalid_argument("BloomFilter: j must be >= 1");
}

uint64_t BloomFilter::position(std::string_view key, uint32_t index) const {
  return digest(key, spec_.base_seed + index, 0).w0 % n_bits_;
}

void BloomFilter::insert(std::string_view key) {
  for (uint32_t i = 0; i < num_hashes_; ++i) {
    const uint64_t pos = position(key, i);
    words_[pos / 64] |= uint64_t{1} << (pos % 64);
  }
}

QueryResult BloomFilter::query(std::string_view key) const {
  for (uint32_t i = 0; i < num_hashes_; ++i) {
    const uint64_t pos = position(key, i);
    if (((words_[pos / 64] >> (pos % 64)) & 1) == 0) return QueryResult::no;
  }
  return QueryResult::maybe;
}

uint64_t BloomFilter::popcount() const {
  uint64_t total = 0;
  for (uint64_t w : words_) total += static_cast<uint64_t>(std::popcount(w));
  return total;
}

double bloom_efficiency(double measured_fpr, uint64_t n_bits, uint64_t m) {
  if (!(measured_fpr > 0.0) || !(measured_fpr < 1.0))
    throw std::domain_error("bloom_efficiency: fpr must be in (0, 1)");
  if (n_bits < 1 || m < 1)
    throw std::domain_error("bloom_efficiency: counts must be >= 1");
  const double bits_per_key = static_cast<double>(n_bits) / static_cast<double>(m);
  return -std::log2(measured_fpr) / bits_per_key;
}

double bloom_fpr_theory(uint64_t n_bits, uint64_t m, uint32_t j) {
  const double exponent = -static_cast<double>(j) * static_cast<double>(m) /
                          static_cast<double>(n_bits);
  return std::pow(1.0 - std::exp(exponent), static_cast<double>(j));
}

uint32_t bloom_optimal_hashes(uint64_t n_bits, uint64_t m) {
  const double ideal =
      static_cast<double>(n_bits) / static_cast<double>(m) * std::log(2.0);
  return std::max(1u, static_cast<uint32_t>(std::lround(ideal)));
}

}  // namespace naef
