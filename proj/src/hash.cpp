#include "naef/hash.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>
#include <string>

namespace naef {

namespace {

inline uint64_t rotl64(uint64_t x, int r) { return (x << r) | (x >> (64 - r)); }

inline uint64_t fmix64(uint64_t k) {
  k ^= k >> 33;
  k *= 0xff51afd7ed558ccdull;
  k ^= k >> 33;
  k *= 0xc4ceb9fe1a85ec53ull;
  k ^= k >> 33;
  return k;
}

inline uint32_t fmix32(uint32_t h) {
  h ^= h >> 16;
  h *= 0x85ebca6bu;
  h ^= h >> 13;
  h *= 0xc2b2ae35u;
  h ^= h >> 16;
  return h;
}

inline uint64_t load_le64(const uint8_t* p) {
  uint64_t v;
  std::memcpy(&v, p, sizeof v);
  if constexpr (std::endian::native == std::endian::big) v = __builtin_bswap64(v);
  return v;
}

}  // namespace

KeyDigest murmur3_x64_128(const void* data, size_t len, uint32_t seed) {
  const auto* bytes = static_cast<const uint8_t*>(data);
  const size_t nblocks = len / 16;

  uint64_t h1 = seed;
  uint64_t h2 = seed;
  const uint64_t c1 = 0x87c37b91114253d5ull;
  const uint64_t c2 = 0x4cf5ad432745937full;

  for (size_t i = 0; i < nblocks; ++i) {
    uint64_t k1 = load_le64(bytes + i * 16);
    uint64_t k2 = load_le64(bytes + i * 16 + 8);

    k1 *= c1;
    k1 = rotl64(k1, 31);
    k1 *= c2;
    h1 ^= k1;
    h1 = rotl64(h1, 27);
    h1 += h2;
    h1 = h1 * 5 + 0x52dce729;

    k2 *= c2;
    k2 = rotl64(k2, 33);
    k2 *= c1;
    h2 ^= k2;
    h2 = rotl64(h2, 31);
    h2 += h1;
    h2 = h2 * 5 + 0x38495ab5;
  }

  const uint8_t* tail = bytes + nblocks * 16;
  uint64_t k1 = 0;
  uint64_t k2 = 0;
  switch (len & 15) {
    case 15: k2 ^= uint64_t{tail[14]} << 48; [[fallthrough]];
    case 14: k2 ^= uint64_t{tail[13]} << 40; [[fallthrough]];
    case 13: k2 ^= uint64_t{tail[12]} << 32; [[fallthrough]];
    case 12: k2 ^= uint64_t{tail[11]} << 24; [[fallthrough]];
    case 11: k2 ^= uint64_t{tail[10]} << 16; [[fallthrough]];
    case 10: k2 ^= uint64_t{tail[9]} << 8; [[fallthrough]];
    case 9:
      k2 ^= uint64_t{tail[8]};
      k2 *= c2;
      k2 = rotl64(k2, 33);
      k2 *= c1;
      h2 ^= k2;
      [[fallthrough]];
    case 8: k1 ^= uint64_t{tail[7]} << 56; [[fallthrough]];
    case 7: k1 ^= uint64_t{tail[6]} << 48; [[fallthrough]];
    case 6: k1 ^= uint64_t{tail[5]} << 40; [[fallthrough]];
    case 5: k1 ^= uint64_t{tail[4]} << 32; [[fallthrough]];
    case 4: k1 ^= uint64_t{tail[3]} << 24; [[fallthrough]];
    case 3: k1 ^= uint64_t{tail[2]} << 16; [[fallthrough]];
    case 2: k1 ^= uint64_t{tail[1]} << 8; [[fallthrough]];
    case 1:
      k1 ^= uint64_t{tail[0]};
      k1 *= c1;
      k1 = rotl64(k1, 31);
      k1 *= c2;
      h1 ^= k1;
  }

  h1 ^= len;
  h2 ^= len;
  h1 += h2;
  h2 += h1;
  h1 = fmix64(h1);
  h2 = fmix64(h2);
  h1 += h2;
  h2 += h1;
  return {h1, h2};
}

KeyDigest digest(std::string_view key, uint32_t seed, uint32_t counter) {
  // fmix32(0) == 0, so counter 0 leaves the seed untouched.
  return murmur3_x64_128(key.data(), key.size(), seed ^ fmix32(counter));
}

uint64_t DigestBitStream::take(unsigned nbits) {
  uint64_t value = 0;
  unsigned got = 0;
  while (got < nbits) {
    if (pos_ == 128) {
      ++counter_;
      current_ = digest(key_, seed_, counter_);
      pos_ = 0;
    }
    const uint64_t word = pos_ < 64 ? current_.w0 : current_.w1;
    const unsigned offset = pos_ & 63;
    const unsigned grab = std::min(nbits - got, 64 - offset);
    const uint64_t mask = grab == 64 ? ~uint64_t{0} : (uint64_t{1} << grab) - 1;
    value |= ((word >> offset) & mask) << got;
    pos_ += grab;
    got += grab;
  }
  return value;
}

Clause derive_clause(std::string_view key, const HashSpec& spec, uint32_t n,
                     uint32_t k) {
  if (k < 2) throw std::invalid_argument("derive_clause: k must be >= 2");
  if (n < k)
    throw std::invalid_argument("derive_clause: n = " + std::to_string(n) +
                                " < k = " + std::to_string(k));
  const unsigned var_bits = n > 1 ? std::bit_width(n - 1) : 1u;

  DigestBitStream var_stream(key, spec.base_seed);
  DigestBitStream sign_only(key, spec.base_seed + 1);
  DigestBitStream& sign_stream =
      spec.mode == HashMode::two_hash ? sign_only : var_stream;

  Clause c;
  c.literals.reserve(k);
  for (uint32_t i = 0; i < k; ++i) {
    uint32_t var;
    for (;;) {
      var = static_cast<uint32_t>(var_stream.take(var_bits));
      if (var >= n) continue;
      bool duplicate = false;
      for (const Literal& l : c.literals)
        if (l.var == var) {
          duplicate = true;
          break;
        }
      if (!duplicate) break;
    }
    const bool negated = sign_stream.take(1) == 1;
    c.literals.push_back(Literal{var, negated});
  }
  return c;
}

}  // namespace naef
