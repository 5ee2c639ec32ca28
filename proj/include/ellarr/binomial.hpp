#pragma once

#include <cstdint>

namespace ellarr {

// C(n,k) for n <= 64; every value in that range fits in 64 bits.
inline uint64_t binom64(unsigned n, unsigned k) {
  static const auto table = [] {
    struct T {
      uint64_t c[65][65] = {};
    } t;
    for (unsigned i = 0; i <= 64; ++i) {
      t.c[i][0] = 1;
      for (unsigned j = 1; j <= i; ++j)
        t.c[i][j] = t.c[i - 1][j - 1] + (j <= i - 1 ? t.c[i - 1][j] : 0);
    }
    return t;
  }();
  if (n > 64 || k > n) return 0;
  return table.c[n][k];
}

}  // namespace ellarr
