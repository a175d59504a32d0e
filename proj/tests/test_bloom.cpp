#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "naef/bloom.hpp"
#include "naef/metrics.hpp"

using namespace naef;
using namespace naef::test;

TEST_CASE("insert then query") {
  BloomFilter bf(1024, 5, HashSpec{});
  CHECK(bf.query("hello") == QueryResult::no);  // empty filter says no
  bf.insert("hello");
  CHECK(bf.query("hello") == QueryResult::maybe);
  CHECK(bf.popcount() <= 5);

  const uint64_t before = bf.popcount();
  bf.insert("hello");  // idempotent
  CHECK(bf.popcount() == before);
}

TEST_CASE("all-ones filter answers maybe") {
  BloomFilter bf(64, 2, HashSpec{});
  Rng rng(1);
  for (int i = 0; i < 4000; ++i) bf.insert(random_key8(rng));
  REQUIRE(bf.popcount() == 64);
  for (int i = 0; i < 100; ++i)
    CHECK(bf.query(random_key8(rng)) == QueryResult::maybe);
}

TEST_CASE("no false negatives and monotone maybes") {
  Rng rng(2);
  BloomFilter bf(4096, 4, HashSpec{});
  std::vector<std::string> keys;
  for (int i = 0; i < 200; ++i) keys.push_back(random_key8(rng));

  std::vector<std::string> probes;
  for (int i = 0; i < 500; ++i) probes.push_back(random_key8(rng));
  std::vector<QueryResult> before;
  before.reserve(probes.size());
  for (const auto& p : probes) before.push_back(bf.query(p));

  for (const auto& key : keys) {
    bf.insert(key);
    CHECK(bf.query(key) == QueryResult::maybe);
  }
  // Inserting more keys never turns a maybe into a no.
  for (size_t i = 0; i < probes.size(); ++i)
    if (before[i] == QueryResult::maybe)
      CHECK(bf.query(probes[i]) == QueryResult::maybe);
}

TEST_CASE("empirical FPR matches the closed form within 4 sigma") {
  // m = 2^14 keys into n = 2*10^5 bits with j = 7.
  constexpr uint64_t n_bits = 200'000;
  constexpr uint64_t m = 1 << 14;
  constexpr uint32_t j = 7;

  Rng rng(3);
  BloomFilter bf(n_bits, j, HashSpec{});
  std::unordered_set<std::string> members;
  while (members.size() < m) members.insert(random_key8(rng));
  for (const auto& key : members) bf.insert(key);

  constexpr uint64_t trials = 200'000;
  const FprEstimate est = measure_fpr(bf, trials, 99, members);
  const double theory = bloom_fpr_theory(n_bits, m, j);
  const double sigma = std::sqrt(theory * (1.0 - theory) / trials);
  CHECK(std::abs(est.estimate - theory) < 4.0 * sigma);
}

TEST_CASE("efficiency formula and domain errors") {
  CHECK(bloom_efficiency(0.5, 100, 100) == doctest::Approx(1.0));
  CHECK_THROWS_AS(bloom_efficiency(1.0, 100, 100), std::domain_error);
  CHECK_THROWS_AS(bloom_efficiency(0.0, 100, 100), std::domain_error);
  CHECK_THROWS_AS(bloom_efficiency(-0.1, 100, 100), std::domain_error);
}

TEST_CASE("optimal hash count tracks n/m ln 2") {
  CHECK(bloom_optimal_hashes(200'000, 1 << 14) == 8);  // 12.2 * 0.693 = 8.46
  CHECK(bloom_optimal_hashes(100, 1000) == 1);         // floor at 1
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(BloomFilter(0, 1, HashSpec{}), std::invalid_argument);
  CHECK_THROWS_AS(BloomFilter(10, 0, HashSpec{}), std::invalid_argument);
}
