#include <doctest.h>

#include <random>
#include <sstream>

#include "ellarr/elimination.hpp"
#include "ellarr/errors.hpp"
#include "ellarr/field.hpp"
#include "ellarr/linalg.hpp"
#include "helpers.hpp"

using namespace ellarr;

namespace {

SparseMatrix from_dense(const std::vector<std::vector<int64_t>>& rows) {
  SparseMatrix m;
  m.cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows) {
    std::vector<std::pair<uint32_t, int64_t>> row;
    for (size_t c = 0; c < r.size(); ++c)
      if (r[c]) row.emplace_back(c, r[c]);
    m.add_row(std::move(row));
  }
  return m;
}

}  // namespace

TEST_CASE("prime field basics") {
  PrimeField f(2147483647u);
  CHECK(f.mul(f.from_int(-3), f.from_int(5)) == f.from_int(-15));
  uint32_t x = f.from_int(123456789);
  CHECK(f.mul(x, f.inv(x)) == 1);
  CHECK(f.from_int(-1) == 2147483646u);
  CHECK(f.pow(x, f.p() - 1) == 1);  // Fermat
}

TEST_CASE("prime pool and sequences") {
  CHECK(prime_pool.size() == 62);
  CHECK(prime_pool.front() == 2147483647u);  // 2^31 - 1
  for (size_t i = 1; i < prime_pool.size(); ++i)
    CHECK(prime_pool[i] < prime_pool[i - 1]);

  auto a = prime_sequence(0), b = prime_sequence(0), c = prime_sequence(1);
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.size() == prime_pool.size());
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  CHECK(std::equal(sorted.begin(), sorted.end(), prime_pool.begin()));
}

TEST_CASE("rank over a prime field") {
  SUBCASE("identity") {
    CHECK(rank_mod_p(from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
                     prime_pool[0]) == 3);
  }
  SUBCASE("a prime divisor hides rank") {
    SparseMatrix m = from_dense({{2147483647}});
    CHECK(rank_mod_p(m, 2147483647u) == 0);
    CHECK(rank_mod_p(m, 2147483629u) == 1);
  }
  SUBCASE("dependent rows collapse") {
    CHECK(rank_mod_p(from_dense({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}),
                     prime_pool[0]) == 2);
  }
  SUBCASE("empty and zero matrices") {
    SparseMatrix z;
    z.cols = 5;
    z.add_row({});
    CHECK(rank_mod_p(z, prime_pool[0]) == 0);
  }
}

TEST_CASE("fraction-free exact rank as oracle") {
  SUBCASE("nonsingular") {
    CHECK(exact_rank_fraction_free(from_dense(
              {{1, 1, 1, 1}, {1, 2, 4, 8}, {1, 3, 9, 27}, {1, 4, 16, 64}})) ==
          4);
  }
  SUBCASE("rank-1 outer product") {
    std::vector<std::vector<int64_t>> rows(10, std::vector<int64_t>(10));
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) rows[i][j] = int64_t(i + 1) * (j + 2);
    CHECK(exact_rank_fraction_free(from_dense(rows)) == 1);
  }
  SUBCASE("planted rank 17") {
    std::mt19937 rng(8675309);
    std::uniform_int_distribution<int> val(-4, 4);
    std::vector<std::vector<int64_t>> a(40, std::vector<int64_t>(17)),
        b(17, std::vector<int64_t>(40)), prod(40, std::vector<int64_t>(40, 0));
    for (auto& r : a)
      for (auto& x : r) x = val(rng);
    for (auto& r : b)
      for (auto& x : r) x = val(rng);
    for (int i = 0; i < 40; ++i)
      for (int k = 0; k < 17; ++k)
        for (int j = 0; j < 40; ++j) prod[i][j] += a[i][k] * b[k][j];
    SparseMatrix m = from_dense(prod);
    uint64_t exact = exact_rank_fraction_free(m);
    CHECK(exact <= 17);
    CHECK(rank_mod_p(m, prime_pool[7]) == exact);  // ≥ via a prime
    CHECK(exact == 17);
  }
  SUBCASE("size cap") {
    SparseMatrix m;
    m.cols = 2000;
    for (int i = 0; i < 2000; ++i) m.add_row({{uint32_t(i), 1}});
    CHECK_THROWS_AS(exact_rank_fraction_free(m), Error);
  }
}

TEST_CASE("modular vs exact rank statistics") {
  std::mt19937 rng(160914);
  int bad_prime_events = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + trial % 12, cols = 1 + (trial * 7) % 15;
    SparseMatrix m =
        testing::random_sparse_matrix(rng, rows, cols, 0.3 + 0.02 * (trial % 10));
    uint64_t exact = exact_rank_fraction_free(m);
    auto seq = prime_sequence(trial);
    uint64_t best = 0;
    for (int i = 0; i < 3; ++i) {
      uint64_t r = rank_mod_p(m, seq[i]);
      CHECK(r <= exact);  // mod-p rank never exceeds the rational rank
      best = std::max(best, r);
    }
    if (best != exact) {
      ++bad_prime_events;
      MESSAGE("all three primes undershot on trial " << trial);
    }
  }
  // entries are tiny compared to 2^31-scale primes; a triple miss would mean
  // three ~2^31 primes all divide a fixed nonzero minor
  CHECK(bad_prime_events == 0);
}

TEST_CASE("certified rank") {
  SUBCASE("zero matrix certifies trivially") {
    SparseMatrix z;
    z.cols = 4;
    z.add_row({});
    RankResult r = rank_certified(z);
    CHECK(r.rank == 0);
  }
  SUBCASE("multi-prime agreement on a generic matrix") {
    std::mt19937 rng(2024);
    SparseMatrix m = testing::random_sparse_matrix(rng, 20, 30, 0.2);
    RankConfig cfg;
    cfg.seed = 5;
    RankResult r = rank_certified(m, cfg);
    CHECK(r.certified == Certification::multi_prime_agreement);
    CHECK(r.rank == exact_rank_fraction_free(m));
    CHECK(r.primes_used.size() == 2);
  }
  SUBCASE("expected rank reached on the first prime is GF-certified") {
    SparseMatrix m = from_dense({{1, 2}, {3, 4}});
    RankConfig cfg;
    cfg.expected_rank = 2;
    RankResult r = rank_certified(m, cfg);
    CHECK(r.certified == Certification::gf_certified);
    CHECK(r.rank == 2);
  }
  SUBCASE("retries walk past a bad prime") {
    RankConfig cfg;
    cfg.seed = 12;
    cfg.expected_rank = 1;
    uint32_t bad = prime_sequence(cfg.seed)[0];
    SparseMatrix m = from_dense({{int64_t(bad)}});
    RankResult r = rank_certified(m, cfg);
    CHECK(r.rank == 1);
    CHECK(r.certified == Certification::gf_certified);
    CHECK(r.primes_used.size() >= 2);
  }
  SUBCASE("unattainable expected rank is a hard error") {
    SparseMatrix m = from_dense({{1, 1}, {1, 1}});
    RankConfig cfg;
    cfg.expected_rank = 2;
    cfg.retry_budget = 2;
    CHECK_THROWS_AS(rank_certified(m, cfg), Error);
    try {
      rank_certified(m, cfg);
    } catch (const Error& e) {
      CHECK(e.code() == errc::certification_failed);
    }
  }
  SUBCASE("determinism: same seed, same result") {
    std::mt19937 rng(42);
    SparseMatrix m = testing::random_sparse_matrix(rng, 15, 15, 0.4);
    RankConfig cfg;
    cfg.seed = 99;
    RankResult a = rank_certified(m, cfg);
    RankResult b = rank_certified(m, cfg);
    CHECK(a.rank == b.rank);
    CHECK(a.primes_used == b.primes_used);
    CHECK(a.certified == b.certified);
  }
}

TEST_CASE("rank is invariant under row and column permutation") {
  std::mt19937 rng(1123);
  for (int trial = 0; trial < 20; ++trial) {
    SparseMatrix m = testing::random_sparse_matrix(rng, 12, 18, 0.25);
    uint64_t r = rank_mod_p(m, prime_pool[3]);

    SparseMatrix shuffled = m;
    std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng);
    CHECK(rank_mod_p(shuffled, prime_pool[3]) == r);

    std::vector<uint32_t> perm(m.cols);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SparseMatrix permuted;
    permuted.cols = m.cols;
    for (const auto& row : m.entries) {
      std::vector<std::pair<uint32_t, int64_t>> nr;
      for (auto [c, v] : row) nr.emplace_back(perm[c], v);
      std::sort(nr.begin(), nr.end());
      permuted.add_row(std::move(nr));
    }
    CHECK(rank_mod_p(permuted, prime_pool[3]) == r);
    CHECK(rank_mod_p(transpose(m), prime_pool[3]) == r);
  }
}

TEST_CASE("incremental eliminator internals") {
  PrimeField f(prime_pool[0]);
  auto e = make_eliminator(6, f);
  CHECK(e->insert({{0, 1}, {2, 5}}));
  CHECK(e->insert({{1, 2}, {2, 1}}));
  CHECK(!e->insert({{0, 2}, {1, 4}, {2, f.from_int(12)}}));  // dependent
  CHECK(e->rank() == 2);
  CHECK(e->is_pivot(0));
  CHECK(e->is_pivot(1));
  CHECK(!e->is_pivot(2));
  CHECK(e->free_columns() == std::vector<uint32_t>{2, 3, 4, 5});

  SUBCASE("reduce produces normal forms supported on free columns") {
    FpVec v = e->reduce({{0, 1}, {1, 1}, {3, 1}});
    REQUIRE(!v.empty());
    for (const auto& entry : v) CHECK(!e->is_pivot(entry.col));
    // inserted rows reduce to nothing
    CHECK(e->reduce({{0, 1}, {2, 5}}).empty());
  }
}

TEST_CASE("dense and sparse eliminators agree") {
  std::mt19937 rng(3459);
  for (int trial = 0; trial < 10; ++trial) {
    SparseMatrix m = testing::random_sparse_matrix(rng, 30, 25, 0.5);
    PrimeField f(prime_pool[1]);
    auto dense = make_eliminator(m.cols, f, nullptr, 0.5);   // dense route
    auto sparse = make_eliminator(m.cols, f, nullptr, 0.01); // sparse route
    for (const auto& row : m.entries) {
      FpVec v;
      for (auto [c, val] : row)
        if (uint32_t r = f.from_int(val)) v.push_back({c, r});
      dense->insert(v);
      sparse->insert(v);
    }
    CHECK(dense->rank() == sparse->rank());
    CHECK(dense->free_columns() == sparse->free_columns());
  }
}

TEST_CASE("memory gauge enforces the budget") {
  MemoryGauge tiny(256);
  PrimeField f(prime_pool[0]);
  bool threw = false;
  try {
    auto e = make_eliminator(50, f, &tiny);  // the column index alone charges
    for (uint32_t i = 0; i + 1 < 50; ++i) e->insert({{i, 1}, {i + 1, 2}});
  } catch (const Error& err) {
    threw = (err.code() == errc::memory_budget_exceeded);
  }
  CHECK(threw);
  CHECK(tiny.peak() > 0);
  CHECK(tiny.peak() <= 256);
}

TEST_CASE("matrix market dump") {
  SparseMatrix m = from_dense({{1, 0, -2}, {0, 3, 0}});
  std::ostringstream os;
  m.write_matrix_market(os);
  CHECK(os.str() ==
        "%%MatrixMarket matrix coordinate integer general\n"
        "2 3 3\n"
        "1 1 1\n"
        "1 3 -2\n"
        "2 2 3\n");
  CHECK(m.well_formed());
}
