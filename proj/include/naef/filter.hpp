#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "naef/cnf.hpp"
#include "naef/hash.hpp"
#include "naef/solver.hpp"

namespace naef {

inline constexpr char kFilterMagic[4] = {'N', 'A', 'E', 'F'};
inline constexpr uint16_t kFilterVersion = 1;
inline constexpr size_t kFilterHeaderBytes = 64;

struct FilterHeader {
  uint16_t version = kFilterVersion;
  uint16_t k = 0;       // clause width
  uint64_t n = 0;       // variables per solution
  uint64_t m = 0;       // keyset size |Y|
  uint32_t s = 0;       // stored solution count
  HashSpec hash_spec;
  uint16_t build_engine_id = 0;

  double alpha() const { return static_cast<double>(m) / static_cast<double>(n); }
};

// n bit-rows of s bits each, packed into ceil(s/64) words per row.
// Row i, bit j is solution j's value of variable i, so a k-literal query
// touches k rows and evaluates 64 solutions per word operation. Trailing
// pad bits are zero.
class SolutionMatrix {
 public:
  SolutionMatrix() = default;
  SolutionMatrix(uint64_t rows, uint32_t columns)
      : rows_(rows),
        columns_(columns),
        words_per_row_((columns + 63) / 64),
        words_(rows * words_per_row_, 0) {}

  static SolutionMatrix pack(std::span<const Assignment> solutions);

  uint64_t rows() const { return rows_; }
  uint32_t columns() const { return columns_; }
  uint64_t words_per_row() const { return words_per_row_; }

  std::span<const uint64_t> row(uint64_t var) const {
    return {words_.data() + var * words_per_row_, words_per_row_};
  }

  bool bit(uint64_t var, uint32_t solution) const {
    return (words_[var * words_per_row_ + solution / 64] >> (solution % 64)) & 1;
  }

  void set_bit(uint64_t var, uint32_t solution, bool value) {
    uint64_t& w = words_[var * words_per_row_ + solution / 64];
    const uint64_t mask = uint64_t{1} << (solution % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  Assignment column(uint32_t solution) const;

  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> mutable_words() { return words_; }

  friend bool operator==(const SolutionMatrix&, const SolutionMatrix&) = default;

 private:
  uint64_t rows_ = 0;
  uint32_t columns_ = 0;
  uint64_t words_per_row_ = 0;
  std::vector<uint64_t> words_;
};

struct NaeSatFilter {
  FilterHeader header;
  SolutionMatrix matrix;
};

enum class QueryResult : uint8_t { no = 0, maybe = 1 };

// NAE is the operative semantics; plain SAT querying is kept for A/B
// comparison of the two false-positive-rate regimes.
enum class QuerySemantics : uint8_t { nae = 0, sat = 1 };

class format_error : public std::runtime_error {
 public:
  explicit format_error(const std::string& check)
      : std::runtime_error("filter format: " + check) {}
};

class build_error : public std::runtime_error {
 public:
  build_error(const std::string& msg, uint32_t achieved, double ratio,
              uint64_t attempts)
      : std::runtime_error(msg),
        achieved_s(achieved),
        alpha(ratio),
        attempts_used(attempts) {}

  uint32_t achieved_s;
  double alpha;
  uint64_t attempts_used;
};

struct BuildParams {
  uint16_t k = 0;
  uint64_t n = 0;
  uint32_t s = 0;
  HashSpec hash_spec;
  EngineKind engine = EngineKind::walksat;
  SolverBudget budget;  // max_steps 0 selects the engine default
  double min_hamming_frac = 0.0;
  unsigned max_threads = 0;  // 0 = hardware concurrency
};

// The formula behind a keyset: one derived clause per key, duplicates
// permitted (duplicate keys are wasteful but harmless).
Cnf cnf_from_keys(std::span<const std::string> keys, const HashSpec& spec,
                  uint64_t n, uint16_t k);

// Advisory satisfiability ceiling for random NAE formulas of width k;
// builds above it get a warning, not an error.
double hardness_alpha_ceiling(uint16_t k);

// Build the filter: derive the CNF, collect s NAE solutions, pack.
// Deterministic given (key order, params, budget.rng_seed). Throws
// std::invalid_argument on bad parameters and build_error when the
// solver budget runs out (diagnostics included).
NaeSatFilter build_filter(std::span<const std::string> keys,
                          const BuildParams& params);

// Pack externally supplied solutions (already verified by the caller)
// into a filter with the given provenance tag.
NaeSatFilter assemble_filter(uint64_t m, uint16_t k, uint64_t n,
                             const HashSpec& spec,
                             std::span<const Assignment> solutions,
                             EngineKind provenance);

// Maybe iff the key's derived clause is satisfied by all s stored
// solutions under the chosen semantics.
QueryResult query(const NaeSatFilter& filter, std::string_view key,
                  QuerySemantics semantics = QuerySemantics::nae);

// Solution-by-solution oracle for the packed kernel; must agree with
// query on every input.
QueryResult scalar_query_reference(const NaeSatFilter& filter,
                                   std::string_view key,
                                   QuerySemantics semantics = QuerySemantics::nae);

struct BatchTiming {
  double total_seconds = 0.0;
  double ns_per_query = 0.0;
};

std::vector<QueryResult> query_batch(const NaeSatFilter& filter,
                                     std::span<const std::string> keys,
                                     BatchTiming* timing = nullptr,
                                     QuerySemantics semantics = QuerySemantics::nae);

// Little-endian layout: magic "NAEF", version u16, k u16, n u64, m u64,
// s u32, hash algorithm_id u16, mode u8, base_seed u32, build_engine_id
// u16, zero padding to 64 bytes, then n rows of ceil(s/64) u64 words.
std::vector<uint8_t> serialize(const NaeSatFilter& filter);
NaeSatFilter deserialize(std::span<const uint8_t> bytes);

void save_filter(const NaeSatFilter& filter, const std::filesystem::path& path);
NaeSatFilter load_filter(const std::filesystem::path& path);

inline uint64_t payload_bytes(const FilterHeader& h) {
  return h.n * ((h.s + 63) / 64) * 8;
}
inline uint64_t storage_bits(const FilterHeader& h) { return h.n * h.s; }

}  // namespace naef
