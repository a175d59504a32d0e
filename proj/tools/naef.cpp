// naef: build, query, and benchmark NAE-SAT membership filters.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "naef/bloom.hpp"
#include "naef/collect.hpp"
#include "naef/dimacs.hpp"
#include "naef/filter.hpp"
#include "naef/metrics.hpp"
#include "naef/rng.hpp"
#include "naef/transform.hpp"

namespace {

using Rng = naef::Rng;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;    // usage, parameter, or format problems
constexpr int kExitSolver = 2;   // solver or verification failures

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SolverFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned thread_cap() {
  if (const char* env = std::getenv("NAEF_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 0;  // library default: hardware concurrency
}

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string parse_hex(const std::string& hex, size_t line_no) {
  if (hex.size() % 2 != 0)
    throw UsageError("line " + std::to_string(line_no) +
                     ": hex key has odd length");
  std::string out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_nibble(hex[i]);
    const int lo = hex_nibble(hex[i + 1]);
    if (hi < 0 || lo < 0)
      throw UsageError("line " + std::to_string(line_no) + ": invalid hex key '" +
                       hex + "'");
    out.push_back(static_cast<char>(hi * 16 + lo));
  }
  return out;
}

std::vector<std::string> read_keys(const std::string& path, bool raw,
                                   unsigned key_bytes) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open keys file '" + path + "'");
  std::vector<std::string> keys;
  if (raw) {
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (key_bytes == 0) throw UsageError("--key-bytes must be positive");
    if (data.size() % key_bytes != 0)
      throw UsageError("raw keys file size " + std::to_string(data.size()) +
                       " is not a multiple of --key-bytes " +
                       std::to_string(key_bytes));
    keys.reserve(data.size() / key_bytes);
    for (size_t off = 0; off < data.size(); off += key_bytes)
      keys.push_back(data.substr(off, key_bytes));
  } else {
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      keys.push_back(parse_hex(line, line_no));
    }
  }
  if (keys.empty()) throw UsageError("keys file '" + path + "' holds no keys");
  return keys;
}

std::string format_sig6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

naef::HashSpec make_hash_spec(const std::string& mode, uint32_t seed) {
  naef::HashSpec spec;
  spec.base_seed = seed;
  if (mode == "one")
    spec.mode = naef::HashMode::one_hash;
  else if (mode == "two")
    spec.mode = naef::HashMode::two_hash;
  else
    throw UsageError("--hash-mode must be 'one' or 'two'");
  return spec;
}

naef::EngineKind parse_engine(const std::string& name) {
  if (name == "walksat") return naef::EngineKind::walksat;
  if (name == "pt") return naef::EngineKind::parallel_tempering;
  throw UsageError("--engine must be 'walksat' or 'pt'");
}

const char* engine_name(uint16_t id) {
  switch (id) {
    case 1: return "walksat";
    case 2: return "pt";
    case 3: return "imported";
    default: return "unknown";
  }
}

uint64_t resolve_n(std::optional<uint64_t> n, std::optional<double> alpha,
                   uint64_t m) {
  if (n.has_value() == alpha.has_value())
    throw UsageError("give exactly one of --n and --alpha");
  if (n) return *n;
  if (!(*alpha > 0.0)) throw UsageError("--alpha must be positive");
  const double resolved = std::round(static_cast<double>(m) / *alpha);
  if (resolved < 1.0) throw UsageError("--alpha yields n < 1");
  return static_cast<uint64_t>(resolved);
}

void print_filter_summary(const naef::FilterHeader& h, std::ostream& os) {
  os << "k:               " << h.k << '\n'
     << "n (variables):   " << h.n << '\n'
     << "m (keys):        " << h.m << '\n'
     << "s (solutions):   " << h.s << '\n'
     << "alpha (m/n):     " << format_sig6(h.alpha()) << '\n'
     << "hash:            murmur3-x64-128, "
     << (h.hash_spec.mode == naef::HashMode::one_hash ? "one-hash" : "two-hash")
     << ", seed " << h.hash_spec.base_seed << '\n'
     << "engine:          " << engine_name(h.build_engine_id) << '\n'
     << "storage bits:    " << naef::storage_bits(h) << '\n'
     << "file bytes:      " << naef::kFilterHeaderBytes + naef::payload_bytes(h)
     << '\n'
     << "theoretical FPR: " << format_sig6(naef::fpr_theory_nae(h.k, h.s)) << '\n'
     << "efficiency:      "
     << format_sig6(naef::efficiency(naef::fpr_theory_nae(h.k, h.s), h.n, h.s, h.m))
     << '\n';
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::string keys_path;
  bool raw = false;
  unsigned key_bytes = 8;
  uint16_t k = 0;
  std::optional<uint64_t> n;
  std::optional<double> alpha;
  uint32_t s = 0;
  std::string engine = "walksat";
  uint64_t seed = 0;
  std::string hash_mode = "one";
  uint32_t hash_seed = 0;
  double min_hamming_frac = 0.0;
  std::string out_path;
};

int run_build(const BuildArgs& args) {
  const auto keys = read_keys(args.keys_path, args.raw, args.key_bytes);

  naef::BuildParams params;
  params.k = args.k;
  params.n = resolve_n(args.n, args.alpha, keys.size());
  params.s = args.s;
  params.hash_spec = make_hash_spec(args.hash_mode, args.hash_seed);
  params.engine = parse_engine(args.engine);
  params.budget.rng_seed = args.seed;
  params.min_hamming_frac = args.min_hamming_frac;
  params.max_threads = thread_cap();

  const double alpha =
      static_cast<double>(keys.size()) / static_cast<double>(params.n);
  if (alpha > naef::hardness_alpha_ceiling(params.k))
    std::cerr << "warning: alpha = " << format_sig6(alpha)
              << " is above the advisory ceiling "
              << format_sig6(naef::hardness_alpha_ceiling(params.k))
              << " for k = " << params.k << "; the build may not converge\n";

  naef::NaeSatFilter filter;
  try {
    filter = naef::build_filter(keys, params);
  } catch (const naef::build_error& e) {
    throw SolverFailure(e.what());
  }
  naef::save_filter(filter, args.out_path);
  print_filter_summary(filter.header, std::cout);
  std::cout << "written:         " << args.out_path << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- query

struct QueryArgs {
  std::string filter_path;
  std::string key_hex;
  std::string keys_path;
  bool raw = false;
  unsigned key_bytes = 8;
  bool sat_semantics = false;
};

int run_query(const QueryArgs& args) {
  const naef::NaeSatFilter filter = naef::load_filter(args.filter_path);
  const auto semantics = args.sat_semantics ? naef::QuerySemantics::sat
                                            : naef::QuerySemantics::nae;
  std::vector<std::string> keys;
  if (!args.key_hex.empty() && !args.keys_path.empty())
    throw UsageError("give --key or --keys, not both");
  if (!args.key_hex.empty())
    keys.push_back(parse_hex(args.key_hex, 1));
  else if (!args.keys_path.empty())
    keys = read_keys(args.keys_path, args.raw, args.key_bytes);
  else
    throw UsageError("give --key or --keys");

  for (const std::string& key : keys)
    std::cout << (naef::query(filter, key, semantics) == naef::QueryResult::maybe
                      ? "maybe"
                      : "no")
              << '\n';
  return kExitOk;
}

// ------------------------------------------------------------- bench-fpr

struct BenchFprArgs {
  uint16_t k = 0;
  std::string s_range;
  uint64_t m = 0;
  double alpha = 0.0;
  uint64_t trials = 100'000;
  std::string engine = "walksat";
  uint64_t seed = 0;
  std::string csv_path;
  bool compare_hash_modes = false;
  bool query_sat = false;
  double min_hamming_frac = 0.0;
};

std::vector<uint32_t> parse_s_range(const std::string& text) {
  // "lo:hi" or "lo:hi:step", inclusive.
  uint32_t lo = 0, hi = 0, step = 1;
  std::istringstream in(text);
  char c1 = 0, c2 = 0;
  in >> lo;
  if (in >> c1 && c1 == ':') in >> hi;
  if (in >> c2 && c2 == ':') in >> step;
  if (in.fail() && !in.eof()) throw UsageError("bad --s-range '" + text + "'");
  if (hi == 0) hi = lo;
  if (lo == 0 || hi < lo || step == 0)
    throw UsageError("bad --s-range '" + text + "' (want lo:hi[:step], lo >= 1)");
  std::vector<uint32_t> out;
  for (uint32_t s = lo; s <= hi; s += step) out.push_back(s);
  return out;
}

int run_bench_fpr(const BenchFprArgs& args) {
  const std::vector<uint32_t> s_values = parse_s_range(args.s_range);
  const uint32_t s_max = s_values.back();
  if (args.m == 0) throw UsageError("--m must be positive");
  if (args.trials == 0) throw UsageError("--trials must be positive");
  const uint64_t n =
      resolve_n(std::nullopt, args.alpha > 0.0 ? std::optional<double>(args.alpha)
                                               : std::nullopt,
                args.m);
  const naef::EngineKind engine = parse_engine(args.engine);
  const auto semantics = args.query_sat ? naef::QuerySemantics::sat
                                        : naef::QuerySemantics::nae;

  Rng key_rng(naef::mix64(args.seed));
  std::vector<std::string> keys;
  std::unordered_set<std::string> members;
  keys.reserve(args.m);
  while (keys.size() < args.m) {
    std::string key = naef::random_key8(key_rng);
    if (members.insert(key).second) keys.push_back(std::move(key));
  }

  std::ofstream csv(args.csv_path);
  if (!csv) throw UsageError("cannot open --csv path '" + args.csv_path + "'");
  csv << "# naef bench-fpr --k " << args.k << " --s-range " << args.s_range
      << " --m " << args.m << " --alpha " << format_sig6(args.alpha)
      << " --trials " << args.trials << " --engine " << args.engine << " --seed "
      << args.seed << (args.compare_hash_modes ? " --compare-hash-modes" : "")
      << (args.query_sat ? " --query-sat" : "") << " (n = " << n << ")\n";
  csv << "k,s,n,m,fpr_theory,fpr_measured,ci_lo,ci_hi,efficiency,hash_mode\n";

  std::vector<std::string> modes{"one"};
  if (args.compare_hash_modes) modes.push_back("two");

  for (const std::string& mode : modes) {
    const naef::HashSpec spec = make_hash_spec(mode, 0);
    const naef::Cnf cnf = naef::cnf_from_keys(keys, spec, n, args.k);
    std::vector<naef::Assignment> solutions;
    try {
      solutions = naef::collect_solutions(
          cnf, s_max, args.seed, engine,
          naef::default_budget(engine, args.seed), args.min_hamming_frac,
          thread_cap());
    } catch (const naef::collect_error& e) {
      throw SolverFailure(std::string("bench-fpr: ") + e.what());
    }

    for (uint32_t s : s_values) {
      const std::span<const naef::Assignment> prefix(solutions.data(), s);
      const naef::NaeSatFilter filter = naef::assemble_filter(
          keys.size(), args.k, n, spec, prefix, engine);
      const naef::FprEstimate est = naef::measure_fpr(
          filter, args.trials, naef::mix64(args.seed + s), members, semantics);
      const double theory = args.query_sat ? naef::fpr_theory_sat(args.k, s)
                                           : naef::fpr_theory_nae(args.k, s);
      const double xi =
          est.estimate > 0.0 && est.estimate < 1.0
              ? naef::efficiency(est.estimate, n, s, args.m)
              : std::numeric_limits<double>::quiet_NaN();
      csv << args.k << ',' << s << ',' << n << ',' << args.m << ','
          << format_sig6(theory) << ',' << format_sig6(est.estimate) << ','
          << format_sig6(est.ci_lo) << ',' << format_sig6(est.ci_hi) << ','
          << format_sig6(xi) << ',' << mode << '\n';
    }
  }
  std::cout << "wrote " << args.csv_path << '\n';
  return kExitOk;
}

// ----------------------------------------------------------- bench-query

struct BenchQueryArgs {
  std::string filter_path;
  uint64_t num_keys = 0;
  uint64_t seed = 0;
  std::string csv_path;
};

int run_bench_query(const BenchQueryArgs& args) {
  if (args.num_keys == 0) throw UsageError("--num-keys must be positive");
  const naef::NaeSatFilter filter = naef::load_filter(args.filter_path);

  Rng rng(naef::mix64(args.seed));
  std::vector<std::string> keys;
  keys.reserve(args.num_keys);
  for (uint64_t i = 0; i < args.num_keys; ++i)
    keys.push_back(naef::random_key8(rng));

  naef::BatchTiming timing;
  const auto results = naef::query_batch(filter, keys, &timing);
  uint64_t maybes = 0;
  for (const auto r : results) maybes += r == naef::QueryResult::maybe;

  std::cout << "queries:     " << args.num_keys << '\n'
            << "maybe:       " << maybes << '\n'
            << "total_s:     " << format_sig6(timing.total_seconds) << '\n'
            << "ns_per_query: " << format_sig6(timing.ns_per_query) << '\n';

  if (!args.csv_path.empty()) {
    std::ofstream csv(args.csv_path);
    if (!csv) throw UsageError("cannot open --csv path '" + args.csv_path + "'");
    csv << "# naef bench-query --filter " << args.filter_path << " --num-keys "
        << args.num_keys << " --seed " << args.seed << '\n';
    csv << "s,total_t,t_per_query\n";
    csv << filter.header.s << ',' << format_sig6(timing.total_seconds) << ','
        << format_sig6(timing.total_seconds /
                       static_cast<double>(args.num_keys))
        << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------ export-cnf

struct ExportArgs {
  std::string keys_path;
  bool raw = false;
  unsigned key_bytes = 8;
  uint16_t k = 0;
  std::optional<uint64_t> n;
  std::optional<double> alpha;
  bool nae_encoded = false;
  std::string hash_mode = "one";
  uint32_t hash_seed = 0;
  std::string out_path;
};

int run_export_cnf(const ExportArgs& args) {
  const auto keys = read_keys(args.keys_path, args.raw, args.key_bytes);
  const uint64_t n = resolve_n(args.n, args.alpha, keys.size());
  const naef::HashSpec spec = make_hash_spec(args.hash_mode, args.hash_seed);
  naef::Cnf cnf = naef::cnf_from_keys(keys, spec, n, args.k);
  if (args.nae_encoded) cnf = naef::to_sat_cnf(cnf);

  std::ofstream out(args.out_path);
  if (!out) throw UsageError("cannot open --out path '" + args.out_path + "'");
  out << "c naef export-cnf k=" << args.k << " n=" << n << " m=" << keys.size()
      << " hash-mode=" << args.hash_mode << " hash-seed=" << args.hash_seed
      << (args.nae_encoded ? " nae-encoded" : "") << '\n';
  naef::write_dimacs(cnf, out);
  std::cout << "wrote " << args.out_path << " (" << cnf.clauses.size()
            << " clauses over " << cnf.num_vars << " variables)\n";
  return kExitOk;
}

// ------------------------------------------------------ import-solutions

struct ImportArgs {
  std::string keys_path;
  bool raw = false;
  unsigned key_bytes = 8;
  uint16_t k = 0;
  std::optional<uint64_t> n;
  std::optional<double> alpha;
  std::string hash_mode = "one";
  uint32_t hash_seed = 0;
  std::string solutions_path;
  std::string out_path;
};

int run_import_solutions(const ImportArgs& args) {
  const auto keys = read_keys(args.keys_path, args.raw, args.key_bytes);
  const uint64_t n = resolve_n(args.n, args.alpha, keys.size());
  const naef::HashSpec spec = make_hash_spec(args.hash_mode, args.hash_seed);
  const naef::Cnf cnf = naef::cnf_from_keys(keys, spec, n, args.k);

  std::ifstream in(args.solutions_path);
  if (!in)
    throw UsageError("cannot open solutions file '" + args.solutions_path + "'");
  std::vector<naef::Assignment> solutions;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.size() != n)
      throw SolverFailure("solution line " + std::to_string(line_no) + " has " +
                          std::to_string(line.size()) + " characters, expected " +
                          std::to_string(n));
    naef::Assignment a(static_cast<uint32_t>(n));
    for (uint32_t i = 0; i < n; ++i) {
      if (line[i] != '0' && line[i] != '1')
        throw SolverFailure("solution line " + std::to_string(line_no) +
                            " holds a character other than 0/1");
      a.set(i, line[i] == '1');
    }
    if (naef::cost_nae(cnf, a) != 0)
      throw SolverFailure("solution line " + std::to_string(line_no) +
                          " is not a NAE solution of the keyset formula");
    solutions.push_back(std::move(a));
  }
  if (solutions.empty()) throw SolverFailure("no solutions in file");

  const naef::NaeSatFilter filter = naef::assemble_filter(
      keys.size(), args.k, n, spec, solutions, naef::EngineKind::imported);
  naef::save_filter(filter, args.out_path);
  print_filter_summary(filter.header, std::cout);
  std::cout << "written:         " << args.out_path << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------ info

int run_info(const std::string& filter_path) {
  const naef::NaeSatFilter filter = naef::load_filter(filter_path);
  print_filter_summary(filter.header, std::cout);
  return kExitOk;
}

// -------------------------------------------------------------- gen-keys

struct GenKeysArgs {
  uint64_t count = 0;
  uint64_t seed = 0;
  bool raw = false;
  std::string out_path;
};

int run_gen_keys(const GenKeysArgs& args) {
  if (args.count == 0) throw UsageError("--count must be positive");
  Rng rng(naef::mix64(args.seed));
  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open --out path '" + args.out_path + "'");
  std::unordered_set<std::string> seen;
  seen.reserve(args.count);
  while (seen.size() < args.count) {
    const std::string key = naef::random_key8(rng);
    if (!seen.insert(key).second) continue;
    if (args.raw) {
      out.write(key.data(), static_cast<std::streamsize>(key.size()));
    } else {
      static const char digits[] = "0123456789abcdef";
      for (const char c : key) {
        out.put(digits[(static_cast<uint8_t>(c) >> 4) & 0xf]);
        out.put(digits[static_cast<uint8_t>(c) & 0xf]);
      }
      out.put('\n');
    }
  }
  std::cout << "wrote " << args.count << " keys to " << args.out_path << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NAE-SAT probabilistic membership filters"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Build a filter from a keys file");
  build->add_option("--keys", build_args.keys_path, "Keys file")->required();
  build->add_flag("--raw", build_args.raw, "Keys file is raw binary records");
  build->add_option("--key-bytes", build_args.key_bytes, "Raw record size [8]");
  build->add_option("--k", build_args.k, "Clause width")->required();
  build->add_option("--n", build_args.n, "Variables per solution");
  build->add_option("--alpha", build_args.alpha, "m/n ratio (alternative to --n)");
  build->add_option("--s", build_args.s, "Stored solution count")->required();
  build->add_option("--engine", build_args.engine, "walksat|pt [walksat]");
  build->add_option("--seed", build_args.seed, "Solver seed [0]");
  build->add_option("--hash-mode", build_args.hash_mode, "one|two [one]");
  build->add_option("--hash-seed", build_args.hash_seed, "Hash base seed [0]");
  build->add_option("--min-hamming-frac", build_args.min_hamming_frac,
                    "Reject solutions closer than this fraction of n [0]");
  build->add_option("--out", build_args.out_path, "Output filter file")->required();

  QueryArgs query_args;
  auto* query = app.add_subcommand("query", "Query a filter");
  query->add_option("--filter", query_args.filter_path, "Filter file")->required();
  query->add_option("--key", query_args.key_hex, "Single key as hex");
  query->add_option("--keys", query_args.keys_path, "Keys file");
  query->add_flag("--raw", query_args.raw, "Keys file is raw binary records");
  query->add_option("--key-bytes", query_args.key_bytes, "Raw record size [8]");
  query->add_flag("--sat-semantics", query_args.sat_semantics,
                  "Query with plain SAT instead of NAE satisfaction");

  BenchFprArgs fpr_args;
  auto* bench_fpr =
      app.add_subcommand("bench-fpr", "Measure FPR across solution counts");
  bench_fpr->add_option("--k", fpr_args.k, "Clause width")->required();
  bench_fpr->add_option("--s-range", fpr_args.s_range, "lo:hi[:step]")->required();
  bench_fpr->add_option("--m", fpr_args.m, "Keyset size")->required();
  bench_fpr->add_option("--alpha", fpr_args.alpha, "m/n ratio")->required();
  bench_fpr->add_option("--trials", fpr_args.trials, "Random probes per row [1e5]");
  bench_fpr->add_option("--engine", fpr_args.engine, "walksat|pt [walksat]");
  bench_fpr->add_option("--seed", fpr_args.seed, "Seed [0]");
  bench_fpr->add_option("--csv", fpr_args.csv_path, "Output CSV")->required();
  bench_fpr->add_flag("--compare-hash-modes", fpr_args.compare_hash_modes,
                      "Emit rows for one-hash and two-hash modes");
  bench_fpr->add_flag("--query-sat", fpr_args.query_sat,
                      "Measure under plain SAT query semantics");
  bench_fpr->add_option("--min-hamming-frac", fpr_args.min_hamming_frac,
                        "Solution separation threshold [0]");

  BenchQueryArgs bq_args;
  auto* bench_query = app.add_subcommand("bench-query", "Time batch queries");
  bench_query->add_option("--filter", bq_args.filter_path, "Filter file")->required();
  bench_query->add_option("--num-keys", bq_args.num_keys, "Batch size")->required();
  bench_query->add_option("--seed", bq_args.seed, "Key generator seed [0]");
  bench_query->add_option("--csv", bq_args.csv_path, "Optional output CSV");

  ExportArgs export_args;
  auto* export_cnf =
      app.add_subcommand("export-cnf", "Write the keyset formula as DIMACS");
  export_cnf->add_option("--keys", export_args.keys_path, "Keys file")->required();
  export_cnf->add_flag("--raw", export_args.raw, "Keys file is raw binary records");
  export_cnf->add_option("--key-bytes", export_args.key_bytes, "Raw record size [8]");
  export_cnf->add_option("--k", export_args.k, "Clause width")->required();
  export_cnf->add_option("--n", export_args.n, "Variables");
  export_cnf->add_option("--alpha", export_args.alpha, "m/n ratio");
  export_cnf->add_flag("--nae-encoded", export_args.nae_encoded,
                       "Emit the penalty-doubled SAT encoding");
  export_cnf->add_option("--hash-mode", export_args.hash_mode, "one|two [one]");
  export_cnf->add_option("--hash-seed", export_args.hash_seed, "Hash base seed [0]");
  export_cnf->add_option("--out", export_args.out_path, "Output DIMACS")->required();

  ImportArgs import_args;
  auto* import_solutions = app.add_subcommand(
      "import-solutions", "Pack externally computed solutions into a filter");
  import_solutions->add_option("--keys", import_args.keys_path, "Keys file")
      ->required();
  import_solutions->add_flag("--raw", import_args.raw,
                             "Keys file is raw binary records");
  import_solutions->add_option("--key-bytes", import_args.key_bytes,
                               "Raw record size [8]");
  import_solutions->add_option("--k", import_args.k, "Clause width")->required();
  import_solutions->add_option("--n", import_args.n, "Variables");
  import_solutions->add_option("--alpha", import_args.alpha, "m/n ratio");
  import_solutions->add_option("--hash-mode", import_args.hash_mode, "one|two [one]");
  import_solutions->add_option("--hash-seed", import_args.hash_seed,
                               "Hash base seed [0]");
  import_solutions
      ->add_option("--solutions", import_args.solutions_path,
                   "One 0/1 line of length n per solution")
      ->required();
  import_solutions->add_option("--out", import_args.out_path, "Output filter file")
      ->required();

  std::string info_path;
  auto* info = app.add_subcommand("info", "Print a filter's header and metrics");
  info->add_option("--filter", info_path, "Filter file")->required();

  GenKeysArgs gen_args;
  auto* gen_keys = app.add_subcommand("gen-keys", "Generate random 8-byte keys");
  gen_keys->add_option("--count", gen_args.count, "Number of keys")->required();
  gen_keys->add_option("--seed", gen_args.seed, "Seed [0]");
  gen_keys->add_flag("--raw", gen_args.raw, "Write raw binary instead of hex lines");
  gen_keys->add_option("--out", gen_args.out_path, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return run_build(build_args);
    if (query->parsed()) return run_query(query_args);
    if (bench_fpr->parsed()) return run_bench_fpr(fpr_args);
    if (bench_query->parsed()) return run_bench_query(bq_args);
    if (export_cnf->parsed()) return run_export_cnf(export_args);
    if (import_solutions->parsed()) return run_import_solutions(import_args);
    if (info->parsed()) return run_info(info_path);
    if (gen_keys->parsed()) return run_gen_keys(gen_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SolverFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  } catch (const naef::format_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const naef::dimacs_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
