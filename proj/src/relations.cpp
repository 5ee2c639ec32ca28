#include "ellarr/relations.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "ellarr/errors.hpp"

namespace ellarr {

namespace {

SignedCombination normalized(std::map<Monomial, int> acc) {
  SignedCombination out;
  for (auto& [mono, c] : acc)
    if (c) out.push_back({mono, c});
  return out;
}

}  // namespace

std::vector<SignedCombination> build_relations(const Graph& g,
                                               const OrientedForest& f,
                                               const std::vector<Circuit>& cs) {
  if (!g.connected())
    fail(errc::disconnected, "the cohomology model needs a connected graph");
  std::vector<SignedCombination> rels;
  rels.reserve(2 * g.m() + cs.size());
  for (int e = 0; e < g.m(); ++e) {
    for (int off = 0; off < 2; ++off) {  // x then y
      std::map<Monomial, int> acc;
      for (auto [t, sign] : f.path[e]) {
        Monomial mono{uint64_t(1) << e,
                      uint64_t(1) << (2 * f.rank_of[t] + off)};
        acc[mono] += sign;  // ω_e precedes every slot: no extra sign
      }
      rels.push_back(normalized(std::move(acc)));
    }
  }
  for (const Circuit& order : cs) {
    std::map<Monomial, int> acc;
    for (size_t i = 0; i < order.size(); ++i) {
      // ∏_{j≠i} ω_{order[j]} multiplied in traversal order, then sorted
      uint64_t w = 0;
      int sign = (i % 2) ? -1 : 1;
      for (size_t j = 0; j < order.size(); ++j) {
        if (j == i) continue;
        int e = order[j];
        int above =
            std::popcount(w & ~((uint64_t(2) << e) - 1));
        if (above & 1) sign = -sign;
        w |= uint64_t(1) << e;
      }
      acc[Monomial{w, 0}] += sign;
    }
    rels.push_back(normalized(std::move(acc)));
  }
  return rels;
}

}  // namespace ellarr
