#include "naef/filter.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>

#include "naef/collect.hpp"

namespace naef {

SolutionMatrix SolutionMatrix::pack(std::span<const Assignment> solutions) {
  if (solutions.empty())
    throw std::invalid_argument("SolutionMatrix: no solutions to pack");
  const uint32_t n = solutions.front().size();
  for (const Assignment& a : solutions)
    if (a.size() != n)
      throw std::invalid_argument("SolutionMatrix: solution lengths differ");
  SolutionMatrix matrix(n, static_cast<uint32_t>(solutions.size()));
  for (uint32_t j = 0; j < solutions.size(); ++j)
    for (uint32_t i = 0; i < n; ++i)
      if (solutions[j].bit(i)) matrix.set_bit(i, j, true);
  return matrix;
}

Assignment SolutionMatrix::column(uint32_t solution) const {
  Assignment a(static_cast<uint32_t>(rows_));
  for (uint64_t i = 0; i < rows_; ++i) a.set(static_cast<uint32_t>(i), bit(i, solution));
  return a;
}

Cnf cnf_from_keys(std::span<const std::string> keys, const HashSpec& spec,
                  uint64_t n, uint16_t k) {
  std::vector<Clause> clauses;
  clauses.reserve(keys.size());
  for (const std::string& key : keys)
    clauses.push_back(derive_clause(key, spec, static_cast<uint32_t>(n), k));
  return Cnf(static_cast<uint32_t>(n), std::move(clauses));
}

double hardness_alpha_ceiling(uint16_t k) {
  // Asymptotic satisfiability threshold estimate for random NAE formulas,
  // 2^(k-1) ln2 - ln2/2 - 1/4, derated by 10% as a comfort margin.
  const double threshold =
      std::pow(2.0, k - 1) * std::log(2.0) - std::log(2.0) / 2.0 - 0.25;
  return 0.9 * threshold;
}

namespace {

void validate_build_shape(uint16_t k, uint64_t n, uint32_t s, uint64_t m) {
  if (k < 2) throw std::invalid_argument("filter: k must be >= 2");
  if (n < k)
    throw std::invalid_argument("filter: n = " + std::to_string(n) +
                                " < k = " + std::to_string(k));
  if (s < 1) throw std::invalid_argument("filter: s must be >= 1");
  if (m < 1) throw std::invalid_argument("filter: keyset must be non-empty");
  if (n > UINT32_MAX) throw std::invalid_argument("filter: n exceeds 2^32 - 1");
}

}  // namespace

NaeSatFilter build_filter(std::span<const std::string> keys,
                          const BuildParams& params) {
  validate_build_shape(params.k, params.n, params.s, keys.size());

  const Cnf cnf = cnf_from_keys(keys, params.hash_spec, params.n, params.k);
  SolverBudget budget = params.budget;
  if (budget.max_steps == 0) {
    const SolverBudget defaults = default_budget(params.engine, budget.rng_seed);
    budget.max_steps = defaults.max_steps;
    budget.max_restarts = defaults.max_restarts;
  }

  std::vector<Assignment> solutions;
  try {
    solutions = collect_solutions(cnf, params.s, budget.rng_seed, params.engine,
                                  budget, params.min_hamming_frac,
                                  params.max_threads);
  } catch (const collect_error& e) {
    throw build_error(
        "build failed: " + std::string(e.what()) + " (alpha = " +
            std::to_string(cnf.alpha()) + ", per-attempt budget " +
            std::to_string(budget.max_steps) + " steps x " +
            std::to_string(budget.max_restarts + 1) + " tries)",
        static_cast<uint32_t>(e.partial_solutions.size()), cnf.alpha(),
        e.attempts_used);
  }

  return assemble_filter(keys.size(), params.k, params.n, params.hash_spec,
                         solutions, params.engine);
}

NaeSatFilter assemble_filter(uint64_t m, uint16_t k, uint64_t n,
                             const HashSpec& spec,
                             std::span<const Assignment> solutions,
                             EngineKind provenance) {
  validate_build_shape(k, n, static_cast<uint32_t>(solutions.size()), m);
  for (const Assignment& a : solutions)
    if (a.size() != n)
      throw std::invalid_argument("filter: solution length != n");

  NaeSatFilter filter;
  filter.header.k = k;
  filter.header.n = n;
  filter.header.m = m;
  filter.header.s = static_cast<uint32_t>(solutions.size());
  filter.header.hash_spec = spec;
  filter.header.build_engine_id = static_cast<uint16_t>(provenance);
  filter.matrix = SolutionMatrix::pack(solutions);
  return filter;
}

namespace {

QueryResult query_clause(const NaeSatFilter& filter, const Clause& clause,
                         QuerySemantics semantics) {
  const SolutionMatrix& matrix = filter.matrix;
  const uint64_t words = matrix.words_per_row();
  const uint32_t s = filter.header.s;

  for (uint64_t w = 0; w < words; ++w) {
    uint64_t any_true = 0;
    uint64_t all_true = ~uint64_t{0};
    for (const Literal& l : clause.literals) {
      // Lane j holds literal l's value under solution j.
      const uint64_t lane = matrix.row(l.var)[w] ^ (l.negated ? ~uint64_t{0} : 0);
      any_true |= lane;
      all_true &= lane;
    }
    uint64_t pass = semantics == QuerySemantics::nae ? (any_true & ~all_true)
                                                     : any_true;
    const uint32_t lanes_here = w + 1 < words
                                    ? 64
                                    : (s - static_cast<uint32_t>(w * 64));
    const uint64_t lane_mask =
        lanes_here == 64 ? ~uint64_t{0} : (uint64_t{1} << lanes_here) - 1;
    if ((pass & lane_mask) != lane_mask) return QueryResult::no;
  }
  return QueryResult::maybe;
}

}  // namespace

QueryResult query(const NaeSatFilter& filter, std::string_view key,
                  QuerySemantics semantics) {
  const Clause clause =
      derive_clause(key, filter.header.hash_spec,
                    static_cast<uint32_t>(filter.header.n), filter.header.k);
  return query_clause(filter, clause, semantics);
}

QueryResult scalar_query_reference(const NaeSatFilter& filter,
                                   std::string_view key,
                                   QuerySemantics semantics) {
  const Clause clause =
      derive_clause(key, filter.header.hash_spec,
                    static_cast<uint32_t>(filter.header.n), filter.header.k);
  for (uint32_t j = 0; j < filter.header.s; ++j) {
    const Assignment a = filter.matrix.column(j);
    const bool passes = semantics == QuerySemantics::nae
                            ? eval_clause_nae(clause, a)
                            : eval_clause_sat(clause, a);
    if (!passes) return QueryResult::no;
  }
  return QueryResult::maybe;
}

std::vector<QueryResult> query_batch(const NaeSatFilter& filter,
                                     std::span<const std::string> keys,
                                     BatchTiming* timing,
                                     QuerySemantics semantics) {
  std::vector<QueryResult> results(keys.size());
  const auto start = std::chrono::steady_clock::now();
  for (size_t i = 0; i < keys.size(); ++i)
    results[i] = query(filter, keys[i], semantics);
  const auto stop = std::chrono::steady_clock::now();
  if (timing) {
    timing->total_seconds = std::chrono::duration<double>(stop - start).count();
    timing->ns_per_query =
        keys.empty() ? 0.0 : timing->total_seconds * 1e9 / keys.size();
  }
  return results;
}

namespace {

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

struct Reader {
  std::span<const uint8_t> bytes;
  size_t pos = 0;

  uint64_t take(size_t count) {
    uint64_t v = 0;
    for (size_t i = 0; i < count; ++i)
      v |= uint64_t{bytes[pos + i]} << (8 * i);
    pos += count;
    return v;
  }
};

}  // namespace

std::vector<uint8_t> serialize(const NaeSatFilter& filter) {
  const FilterHeader& h = filter.header;
  std::vector<uint8_t> out;
  out.reserve(kFilterHeaderBytes + payload_bytes(h));

  out.insert(out.end(), std::begin(kFilterMagic), std::end(kFilterMagic));
  put_u16(out, h.version);
  put_u16(out, h.k);
  put_u64(out, h.n);
  put_u64(out, h.m);
  put_u32(out, h.s);
  put_u16(out, h.hash_spec.algorithm_id);
  out.push_back(static_cast<uint8_t>(h.hash_spec.mode));
  put_u32(out, h.hash_spec.base_seed);
  put_u16(out, h.build_engine_id);
  out.resize(kFilterHeaderBytes, 0);

  for (uint64_t word : filter.matrix.words()) put_u64(out, word);
  return out;
}

NaeSatFilter deserialize(std::span<const uint8_t> bytes) {
  if (bytes.size() < kFilterHeaderBytes)
    throw format_error("input shorter than the 64-byte header");
  if (std::memcmp(bytes.data(), kFilterMagic, 4) != 0)
    throw format_error("bad magic");

  Reader r{bytes, 4};
  NaeSatFilter filter;
  FilterHeader& h = filter.header;
  h.version = static_cast<uint16_t>(r.take(2));
  if (h.version != kFilterVersion)
    throw format_error("unsupported version " + std::to_string(h.version));
  h.k = static_cast<uint16_t>(r.take(2));
  h.n = r.take(8);
  h.m = r.take(8);
  h.s = static_cast<uint32_t>(r.take(4));
  h.hash_spec.algorithm_id = static_cast<uint16_t>(r.take(2));
  if (h.hash_spec.algorithm_id != kHashAlgorithmMurmur3)
    throw format_error("unknown hash algorithm id " +
                       std::to_string(h.hash_spec.algorithm_id));
  const auto mode = static_cast<uint8_t>(r.take(1));
  if (mode > 1) throw format_error("unknown hash mode " + std::to_string(mode));
  h.hash_spec.mode = static_cast<HashMode>(mode);
  h.hash_spec.base_seed = static_cast<uint32_t>(r.take(4));
  h.build_engine_id = static_cast<uint16_t>(r.take(2));
  for (size_t i = r.pos; i < kFilterHeaderBytes; ++i)
    if (bytes[i] != 0) throw format_error("nonzero header padding");

  if (h.k < 2) throw format_error("k < 2");
  if (h.n < h.k) throw format_error("n < k");
  if (h.s < 1) throw format_error("s = 0");
  if (h.m < 1) throw format_error("m = 0");
  if (h.n > UINT32_MAX) throw format_error("n exceeds 2^32 - 1");

  const uint64_t expected = kFilterHeaderBytes + payload_bytes(h);
  if (bytes.size() != expected)
    throw format_error("size mismatch: expected " + std::to_string(expected) +
                       " bytes, got " + std::to_string(bytes.size()));

  filter.matrix = SolutionMatrix(h.n, h.s);
  Reader payload{bytes, kFilterHeaderBytes};
  for (uint64_t& word : filter.matrix.mutable_words()) word = payload.take(8);

  const uint32_t tail_bits = h.s % 64;
  if (tail_bits != 0) {
    const uint64_t pad_mask = ~((uint64_t{1} << tail_bits) - 1);
    for (uint64_t var = 0; var < h.n; ++var)
      if ((filter.matrix.row(var).back() & pad_mask) != 0)
        throw format_error("nonzero pad bits in row " + std::to_string(var));
  }
  return filter;
}

void save_filter(const NaeSatFilter& filter, const std::filesystem::path& path) {
  const std::vector<uint8_t> bytes = serialize(filter);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

NaeSatFilter load_filter(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  const std::streamsize size = in.tellg();
  in.seekg(0);
  std::vector<uint8_t> bytes(static_cast<size_t>(size));
  in.read(reinterpret_cast<char*>(bytes.data()), size);
  if (!in) throw std::runtime_error("short read from " + path.string());
  return deserialize(bytes);
}

}  // namespace naef
