#pragma once

#include <gmpxx.h>

#include <string_view>

#include "ellarr/bipoly.hpp"
#include "ellarr/graph.hpp"
#include "ellarr/hodge_table.hpp"

namespace ellarr {

// Tutte polynomial via deletion–contraction with memoization on canonical
// multigraph keys; loops and bridges are stripped in batches.
BivariatePolynomial tutte(const Graph& g);
BivariatePolynomial tutte(const MultiGraph& g);

// Direct subset expansion Σ_S (x−1)^{rk(E)−rk(S)} (y−1)^{|S|−rk(S)};
// exponential, kept as the independent cross-check.  |E| ≤ 22.
BivariatePolynomial tutte_subset_oracle(const Graph& g);

// χ(t) = (−1)^rk · t^{k−rk} · T(1−t, 0) with k = n−1, rk = n−#components.
LaurentPolynomial characteristic_polynomial(const Graph& g);

// The coefficient group G = H × (S¹)^p × ℝ^q, recorded as the two exponents
// plus the number of connected components |H|.
struct GroupSpec {
  int p = 0;
  int q = 0;
  int components = 1;

  static constexpr GroupSpec hyperplane() { return {0, 2, 1}; }
  static constexpr GroupSpec toric() { return {1, 1, 1}; }
  static constexpr GroupSpec elliptic() { return {2, 0, 1}; }
  static constexpr GroupSpec real_line() { return {0, 1, 1}; }

  bool compact() const { return q == 0; }
  // Euler characteristic of the group itself.
  int euler() const { return p == 0 ? components : 0; }
  // Poincaré polynomial of the group: components·(t+1)^p.
  LaurentPolynomial poincare() const;
};

// "hyperplane" | "toric" | "elliptic" | "real" | "p,q"
GroupSpec parse_group(std::string_view text);

// Poincaré polynomial of the arrangement complement for non-compact G:
// (−t^{p+q−1})^k · χ(−P_G(t)/t^{p+q−1}).  The result is asserted to be a
// polynomial with nonnegative integer coefficients.
LaurentPolynomial poincare_noncompact(const Graph& g, const GroupSpec& grp);

// e(M) = (−1)^{(p+q)·k} · χ((−1)^{p+q} · e(G)); valid for compact G too.
mpz_class euler_characteristic(const Graph& g, const GroupSpec& grp);

// (−1)^k · T(1,0) for connected g.
mpz_class elliptic_euler(const Graph& g);

// Exact E2 dimensions from T(1 + (1+t)²/s, 0)·s^k: entry (p,q) holds the
// coefficient of s^p t^q.  Connected graphs only.
HodgeTable e2_dimension_gf(const Graph& g);

// T(1 − (1+u)²/u², 0)·(−u²)^k: the alternating-diagonal generating
// polynomial of the mixed Hodge numbers.  Connected graphs only.
LaurentPolynomial hodge_u_specialization(const Graph& g);

}  // namespace ellarr
