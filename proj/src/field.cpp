#include "ellarr/field.hpp"

#include <algorithm>
#include <random>

namespace ellarr {

std::vector<uint32_t> prime_sequence(uint64_t seed) {
  std::vector<uint32_t> pool(prime_pool.begin(), prime_pool.end());
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  return pool;
}

}  // namespace ellarr
