#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace ellarr {

// A square-free monomial in the exterior generators.  Bit e of `omega` is
// the edge generator w_e; bits of `xy` index symplectic slots: forest edge
// of rank r owns slots 2r (its x) and 2r+1 (its y).  The global generator
// order puts every w before every x/y, w's by edge index, x/y by slot.
struct Monomial {
  uint64_t omega = 0;
  uint64_t xy = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  int omega_degree() const { return std::popcount(omega); }
  int xy_degree() const { return std::popcount(xy); }
  int degree() const { return omega_degree() + xy_degree(); }
  // Cohomological weight: w generators weigh 2, x/y weigh 1.
  int weight() const { return 2 * omega_degree() + xy_degree(); }
};

// Number of pairs (a in ma, b in mb) with a > b as bit positions; the parity
// of this count is the Koszul sign of sorting the concatenation ma . mb.
inline int mask_inversions(uint64_t ma, uint64_t mb) {
  int inv = 0;
  while (mb) {
    int b = std::countr_zero(mb);
    mb &= mb - 1;
    // bits of ma strictly above position b
    inv += std::popcount(ma & ~((uint64_t(2) << b) - 1));
  }
  return inv;
}

// Sign of a * b in the exterior algebra, or 0 when generators collide.
// Works entirely on masks: w positions all precede x/y positions, so the
// cross inversions are popcount(a.xy) * popcount(b.omega).
inline int merge_sign(const Monomial& a, const Monomial& b) {
  if ((a.omega & b.omega) || (a.xy & b.xy)) return 0;
  int inv = mask_inversions(a.omega, b.omega) + mask_inversions(a.xy, b.xy) +
            std::popcount(a.xy) * std::popcount(b.omega);
  return (inv & 1) ? -1 : 1;
}

inline Monomial merged(const Monomial& a, const Monomial& b) {
  return Monomial{a.omega | b.omega, a.xy | b.xy};
}

// Sign of inserting the even product x_f y_h (slots sx, sy) into an existing
// sorted x/y word.  The pair as a whole is even, so only the interleaving
// with the existing word counts: each existing generator below a slot is one
// transposition, plus one swap if the pair itself arrives out of order.
inline int pair_insert_sign(uint64_t xy_mask, int sx, int sy) {
  int below = std::popcount(xy_mask & ((uint64_t(1) << sx) - 1)) +
              std::popcount(xy_mask & ((uint64_t(1) << sy) - 1));
  int sign = (below & 1) ? -1 : 1;
  if (sx > sy) sign = -sign;
  return sign;
}

}  // namespace ellarr
