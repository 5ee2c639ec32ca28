#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace ellarr {

// Arithmetic in F_p for a prime below 2^31.  Products fit in 64 bits, sums
// in 32, so everything is plain integer code; inversion is Fermat.
class PrimeField {
public:
  explicit PrimeField(uint32_t p) : p_(p) {}

  uint32_t p() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(uint64_t(a) * b % p_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint32_t inv(uint32_t a) const { return pow(a, p_ - 2); }

  // Reduce a signed integer (entry matrices are built over Z).
  uint32_t from_int(int64_t v) const {
    int64_t r = v % int64_t(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

private:
  uint32_t p_;
};

// The 62 largest primes below 2^31.  Runs draw from a seeded shuffle of this
// pool so that reruns with the same seed use the same primes.
inline constexpr std::array<uint32_t, 62> prime_pool = {
    2147483647u, 2147483629u, 2147483587u, 2147483579u, 2147483563u,
    2147483549u, 2147483543u, 2147483497u, 2147483489u, 2147483477u,
    2147483423u, 2147483399u, 2147483353u, 2147483323u, 2147483269u,
    2147483249u, 2147483237u, 2147483179u, 2147483171u, 2147483137u,
    2147483123u, 2147483077u, 2147483069u, 2147483059u, 2147483053u,
    2147483033u, 2147483029u, 2147482951u, 2147482949u, 2147482943u,
    2147482937u, 2147482921u, 2147482877u, 2147482873u, 2147482867u,
    2147482859u, 2147482819u, 2147482817u, 2147482811u, 2147482801u,
    2147482763u, 2147482739u, 2147482697u, 2147482693u, 2147482681u,
    2147482663u, 2147482661u, 2147482621u, 2147482591u, 2147482583u,
    2147482577u, 2147482507u, 2147482501u, 2147482481u, 2147482417u,
    2147482409u, 2147482367u, 2147482361u, 2147482349u, 2147482343u,
    2147482327u, 2147482291u};

// Deterministic seeded permutation of the whole pool.  Callers take a prefix
// and walk further into the sequence when a retry needs a fresh prime.
std::vector<uint32_t> prime_sequence(uint64_t seed);

}  // namespace ellarr
