#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ellarr/elimination.hpp"
#include "ellarr/sparse.hpp"

namespace ellarr {

enum class Certification {
  gf_certified,            // matched an independently known expected value
  multi_prime_agreement,   // >= 2 distinct primes agreed
  single_prime,
};

const char* certification_name(Certification c);

struct RankResult {
  uint64_t rank = 0;
  std::vector<uint32_t> primes_used;
  Certification certified = Certification::single_prime;
};

struct RankConfig {
  uint64_t seed = 0;
  unsigned primes = 2;        // distinct primes to run initially
  unsigned retry_budget = 5;  // extra primes when certification fails
  // When the true rank is known from an external identity, certification
  // means hitting it; disagreement after retries is a hard error.
  std::optional<uint64_t> expected_rank;
  MemoryGauge* gauge = nullptr;
};

// Deterministic echelon rank over F_p.  Rows are inserted lightest-first
// (ties by original index) so fill stays close to what the pivot-ordering
// heuristic would give on these matrices.
uint64_t rank_mod_p(const SparseMatrix& m, uint32_t prime,
                    MemoryGauge* gauge = nullptr);

// Rank via several primes drawn from the seeded pool; see RankConfig.
RankResult rank_certified(const SparseMatrix& m, const RankConfig& cfg = {});

// Bareiss fraction-free elimination over Z.  Exact and slow; guarded by a
// size cap so it stays an oracle for tests rather than a production path.
uint64_t exact_rank_fraction_free(const SparseMatrix& m);

}  // namespace ellarr
