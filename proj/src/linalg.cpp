#include "ellarr/linalg.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>

#include "ellarr/errors.hpp"
#include "ellarr/field.hpp"

namespace ellarr {

bool SparseMatrix::well_formed() const {
  if (entries.size() != rows) return false;
  for (const auto& row : entries) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (row[i].first >= cols || row[i].second == 0) return false;
      if (i > 0 && row[i - 1].first >= row[i].first) return false;
    }
  }
  return true;
}

void SparseMatrix::write_matrix_market(std::ostream& os) const {
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << rows << ' ' << cols << ' ' << nonzeros() << '\n';
  for (uint64_t r = 0; r < rows; ++r)
    for (const auto& [c, v] : entries[r])
      os << (r + 1) << ' ' << (c + 1) << ' ' << v << '\n';
}

SparseMatrix transpose(const SparseMatrix& m) {
  SparseMatrix t;
  t.rows = m.cols;
  t.cols = m.rows;
  t.entries.resize(t.rows);
  for (uint64_t r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.entries[r])
      t.entries[c].emplace_back(static_cast<uint32_t>(r), v);
  return t;
}

const char* certification_name(Certification c) {
  switch (c) {
    case Certification::gf_certified: return "gf-certified";
    case Certification::multi_prime_agreement: return "multi-prime-agreement";
    case Certification::single_prime: return "single-prime";
  }
  return "unknown";
}

uint64_t rank_mod_p(const SparseMatrix& m, uint32_t prime,
                    MemoryGauge* gauge) {
  PrimeField f(prime);
  double fill =
      m.rows && m.cols ? double(m.nonzeros()) / (double(m.rows) * m.cols) : 0;
  auto elim = make_eliminator(m.cols, f, gauge, fill);
  std::vector<uint32_t> order(m.rows);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    return m.entries[a].size() < m.entries[b].size();
  });
  for (uint32_t r : order) {
    FpVec row;
    row.reserve(m.entries[r].size());
    for (const auto& [c, v] : m.entries[r]) {
      uint32_t fv = f.from_int(v);
      if (fv) row.push_back({c, fv});
    }
    elim->insert(std::move(row));
  }
  return elim->rank();
}

RankResult rank_certified(const SparseMatrix& m, const RankConfig& cfg) {
  auto seq = prime_sequence(cfg.seed);
  RankResult res;
  size_t next = 0;
  auto run_one = [&]() -> uint64_t {
    if (next >= seq.size())
      fail(errc::certification_failed, "prime pool exhausted");
    uint32_t p = seq[next++];
    res.primes_used.push_back(p);
    return rank_mod_p(m, p, cfg.gauge);
  };

  if (cfg.expected_rank) {
    uint64_t want = *cfg.expected_rank;
    unsigned attempts = std::max(1u, cfg.primes) + cfg.retry_budget;
    for (unsigned i = 0; i < attempts; ++i) {
      if (run_one() == want) {
        res.rank = want;
        res.certified = Certification::gf_certified;
        return res;
      }
    }
    fail(errc::certification_failed,
         "rank disagreed with expected value over " +
             std::to_string(res.primes_used.size()) + " primes");
  }

  std::vector<uint64_t> ranks;
  for (unsigned i = 0; i < std::max(1u, cfg.primes); ++i)
    ranks.push_back(run_one());
  unsigned retries = 0;
  while (std::set<uint64_t>(ranks.begin(), ranks.end()).size() > 1 &&
         retries < cfg.retry_budget) {
    // A prime in the pool can only undercount: keep the max and look for a
    // second prime confirming it.
    uint64_t best = *std::max_element(ranks.begin(), ranks.end());
    ranks.erase(std::remove_if(ranks.begin(), ranks.end(),
                               [&](uint64_t r) { return r != best; }),
                ranks.end());
    ranks.push_back(run_one());
    ++retries;
  }
  if (std::set<uint64_t>(ranks.begin(), ranks.end()).size() > 1)
    fail(errc::certification_failed, "primes kept disagreeing on rank");
  res.rank = ranks.front();
  res.certified = ranks.size() >= 2 ? Certification::multi_prime_agreement
                                    : Certification::single_prime;
  return res;
}

uint64_t exact_rank_fraction_free(const SparseMatrix& m) {
  if (m.rows * m.cols > 1000000)
    fail(errc::too_large, "fraction-free elimination capped at 10^6 cells");
  std::vector<std::vector<mpz_class>> a(m.rows,
                                        std::vector<mpz_class>(m.cols, 0));
  for (uint64_t r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.entries[r]) a[r][c] = v;

  uint64_t rank = 0;
  mpz_class prev = 1;
  for (uint64_t col = 0; col < m.cols && rank < m.rows; ++col) {
    uint64_t piv = rank;
    while (piv < m.rows && a[piv][col] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[rank], a[piv]);
    for (uint64_t r = rank + 1; r < m.rows; ++r) {
      for (uint64_t c = col + 1; c < m.cols; ++c) {
        mpz_class num = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        mpz_divexact(a[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace ellarr
