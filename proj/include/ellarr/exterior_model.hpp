#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ellarr/graph.hpp"
#include "ellarr/hodge_table.hpp"
#include "ellarr/linalg.hpp"
#include "ellarr/monomial.hpp"
#include "ellarr/relations.hpp"
#include "ellarr/sparse.hpp"

namespace ellarr {

// Everything the E2/E3 machinery needs about one connected graph: forest,
// circuits, relations, and the exact E2 dimension table (the certificate all
// modular ranks are checked against).
struct ModelContext {
  Graph g;
  OrientedForest forest;
  std::vector<Circuit> circuits;
  std::vector<SignedCombination> relations;
  int m = 0;      // edges
  int k = 0;      // rank = forest size (g connected)
  int slots = 0;  // 2k
  HodgeTable gf;  // exact E2 dimensions from the Tutte generating function

  static ModelContext build(const Graph& g);
  // Custom forest (tests exercise orientation/sign choices through this).
  static ModelContext from_parts(Graph g, OrientedForest f);

  uint64_t gf_dim(int p, int q) const;
  bool in_support(int p, int q) const { return gf.in_support(p, q); }

  // Monomial divisible by some ω_t·x_t or ω_t·y_t (t a forest edge): such a
  // column is an ideal element outright and acts as a ready-made pivot.
  bool killed(const Monomial& mono) const;

  // d2(mono) in Λ: differentiate each ω factor with the Leibniz sign, expand
  // x_e y_e through the forest paths, insert the (even) pair into the xy
  // word.  Exact integer coefficients.
  SignedCombination d2_image(const Monomial& mono) const;
  SignedCombination d2_image(const SignedCombination& v) const;

private:
  std::vector<uint64_t> kill_pair_;  // per edge: its x/y slot mask, or 0
};

// All C(m,p)·C(2k,q) monomials of the bidegree, ascending (omega, xy).
std::vector<Monomial> component_monomials(const ModelContext& ctx, Bigrade bg);

// Integer matrix whose rows span I ∩ Λ^{bg}: every relation times every
// complementary monomial, Koszul signs applied.  Columns follow
// component_monomials.  Materialized — meant for tests and small blocks; the
// e3 engine streams the same rows instead.
SparseMatrix ideal_component(const ModelContext& ctx, Bigrade bg);

struct RankOptions {
  uint64_t seed = 0;
  unsigned primes = 2;
  unsigned retry_budget = 5;
  MemoryGauge* gauge = nullptr;
};

struct QuotientResult {
  uint64_t dim = 0;
  std::vector<Monomial> basis;  // non-pivot columns, ascending
  RankResult rank;              // certified rank of the ideal component
};

// dim Λ^{bg}/I^{bg} with the generating-function coefficient as the exact
// certificate; throws certification_failed if no prime attains it.
QuotientResult quotient_dimension(const ModelContext& ctx, Bigrade bg,
                                  const RankOptions& opts = {});

// Induced differential between quotient bases at bg and (p−1, q+2), entries
// reduced mod `prime` (normal forms via the target's elimination pivots).
// Row i = image of the i-th source basis monomial.
SparseMatrix d2_block(const ModelContext& ctx, Bigrade bg, uint32_t prime,
                      const RankOptions& opts = {});

// Mod-p ideal membership of a bihomogeneous combination: eliminate its
// component and check the normal form vanishes.  The empty combination is
// trivially inside.
bool in_ideal(const ModelContext& ctx, const SignedCombination& v,
              uint32_t prime, MemoryGauge* gauge = nullptr);

struct EngineOptions {
  uint64_t seed = 0;
  unsigned primes = 2;        // initial primes per weight line
  unsigned retry_budget = 5;  // extra primes when certification misses
  unsigned threads = 0;       // 0 = hardware concurrency
  uint64_t memory_budget = uint64_t(4) << 30;  // bytes of stored row entries
  // Only report entries with p+q <= degree_cap (blocks one degree beyond the
  // cap still run — the differential reaches into them).
  std::optional<int> degree_cap;
  // Skip bidegree blocks with more than this many monomials; affected
  // entries are left uncomputed and the table is marked partial.
  std::optional<uint64_t> component_cap;
};

struct BlockReport {
  Bigrade bg;
  uint64_t ncols = 0;
  uint64_t killed = 0;
  uint64_t rank_ideal = 0;  // killed + eliminated
  uint64_t e2 = 0;
  // rank of the induced d2 out of this block into (p−1, q+2), with how many
  // primes agreed on it; meaningful only when the target block ran.
  uint64_t rank_out = 0;
  unsigned rank_out_agreement = 0;
  bool enabled = true;
  double millis = 0;  // wall time summed over primes
};

struct RunReport {
  std::vector<BlockReport> blocks;  // ascending (p,q)
  std::vector<uint32_t> primes_used;
  unsigned line_retries = 0;
  uint64_t peak_bytes = 0;
  Certification weakest = Certification::gf_certified;
};

// The E3 dimension table.  Work is organized along weight lines w = 2p+q
// (d2 preserves weight): within a line, blocks are eliminated from high p to
// low, and the images of the previous block's quotient basis are pushed into
// the current block's pivot structure, so the induced rank comes out of the
// same elimination and at most two blocks are alive at once.
HodgeTable e3_table(const ModelContext& ctx, const EngineOptions& opts = {},
                    RunReport* report = nullptr);
HodgeTable e3_table(const Graph& g, const EngineOptions& opts = {},
                    RunReport* report = nullptr);

// Σ_n betti(n) t^n of the elliptic complement; requires a complete table.
LaurentPolynomial poincare_elliptic(const Graph& g,
                                    const EngineOptions& opts = {});

}  // namespace ellarr
