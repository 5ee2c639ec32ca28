#pragma once

#include <cstdint>
#include <optional>

#include "ellarr/bipoly.hpp"
#include "ellarr/exterior_model.hpp"
#include "ellarr/graph.hpp"
#include "ellarr/hodge_table.hpp"

namespace ellarr {

struct Divergence {
  Bigrade bg;
  uint64_t left = 0, right = 0;
};

// tutte_equal ⇒ e2_equal (E2 dimensions are a Tutte specialization), but
// nothing further: the whole point is that e3 can still differ.  e3_equal
// asserts both tables are complete and identical; first_divergence is the
// first (by degree, then p) support entry known on both sides with
// different values, whatever the completeness.
struct CompareVerdict {
  BivariatePolynomial tutte_left, tutte_right;
  HodgeTable e3_left, e3_right;
  bool tutte_equal = false;
  bool e2_equal = false;
  bool e3_equal = false;
  std::optional<Divergence> first_divergence;
};

CompareVerdict compare_graphs(const Graph& left, const Graph& right,
                              const EngineOptions& opts = {});

}  // namespace ellarr
