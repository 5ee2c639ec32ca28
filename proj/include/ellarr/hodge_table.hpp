#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ellarr/bipoly.hpp"

namespace ellarr {

struct Bigrade {
  int p = 0;  // ω-degree
  int q = 0;  // xy-degree
  int degree() const { return p + q; }
  int weight() const { return 2 * p + q; }
  friend auto operator<=>(const Bigrade&, const Bigrade&) = default;
};

// Bigraded dimension table for a connected graph of rank k.  Entries live in
// the support triangle {0 <= p <= k, 0 <= q <= 2(k-p)}; anything outside is
// identically zero.  A table is partial when some support entry was never
// computed — partial tables refuse to produce Betti numbers.
class HodgeTable {
public:
  HodgeTable() = default;
  explicit HodgeTable(int k) : k_(k) {}

  int k() const { return k_; }
  bool in_support(int p, int q) const {
    return p >= 0 && q >= 0 && p <= k_ && q <= 2 * (k_ - p);
  }

  void set(int p, int q, uint64_t v);
  bool known(int p, int q) const;  // computed, or outside support
  uint64_t value(int p, int q) const;  // throws partial_table when unknown
  bool partial() const;

  // Computed entries (explicit zeros included), ordered by (p,q).
  const std::map<std::pair<int, int>, uint64_t>& entries() const {
    return entries_;
  }

  std::vector<uint64_t> betti() const;       // degree 0..max, trailing zeros cut
  LaurentPolynomial poincare() const;        // Σ betti(n) t^n
  mpz_class euler() const;                   // Σ (−1)^{p+q} value
  // Σ_w u^w Σ_p (−1)^p value(p, w−2p): the alternating diagonal sums.
  LaurentPolynomial u_diagnostic() const;

  // Row-per-p layout (p descending, q across) for eye comparison of two
  // tables; unknown cells print as '·'.
  std::string layout() const;

  friend bool operator==(const HodgeTable&, const HodgeTable&) = default;

private:
  int k_ = 0;
  std::map<std::pair<int, int>, uint64_t> entries_;
};

}  // namespace ellarr
