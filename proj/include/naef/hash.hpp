#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "naef/cnf.hpp"

namespace naef {

// Versioned hash algorithm tag stored in the filter header. v1 is
// MurmurHash3 x64-128; unknown ids are rejected at deserialization.
inline constexpr uint16_t kHashAlgorithmMurmur3 = 1;

enum class HashMode : uint8_t { one_hash = 0, two_hash = 1 };

// One-hash mode draws variables and signs from a single seeded stream.
// Two-hash mode draws variables from base_seed and signs from
// base_seed + 1, emulating a second independent hash function.
struct HashSpec {
  uint16_t algorithm_id = kHashAlgorithmMurmur3;
  HashMode mode = HashMode::one_hash;
  uint32_t base_seed = 0;

  friend bool operator==(const HashSpec&, const HashSpec&) = default;
};

struct KeyDigest {
  uint64_t w0 = 0;
  uint64_t w1 = 0;

  friend bool operator==(const KeyDigest&, const KeyDigest&) = default;
};

KeyDigest murmur3_x64_128(const void* data, size_t len, uint32_t seed);

// 128-bit digest of (key, seed, counter). The counter perturbs the seed
// so one hash function yields an unbounded entropy stream; counter 0
// reproduces the plain seeded hash.
KeyDigest digest(std::string_view key, uint32_t seed, uint32_t counter);

// Little-endian bit stream over digest(key, seed, 0), digest(key, seed, 1), ...
// w0 is consumed before w1, least significant bit first.
class DigestBitStream {
 public:
  DigestBitStream(std::string_view key, uint32_t seed)
      : key_(key), seed_(seed), current_(digest(key, seed, 0)) {}

  // Next nbits as an integer, assembled LSB-first. nbits <= 64.
  uint64_t take(unsigned nbits);

 private:
  std::string_view key_;
  uint32_t seed_;
  uint32_t counter_ = 0;
  unsigned pos_ = 0;  // bits consumed from current_
  KeyDigest current_;
};

// Derives the k-literal clause for a key: k pairwise-distinct variables
// in [0, n) by rejection sampling (no modulo bias) plus one sign bit per
// literal. Pure in (key, spec, n, k); the same derivation serves both
// filter construction and querying.
Clause derive_clause(std::string_view key, const HashSpec& spec, uint32_t n,
                     uint32_t k);

}  // namespace naef
