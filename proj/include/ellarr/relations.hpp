#pragma once

#include <vector>

#include "ellarr/graph.hpp"
#include "ellarr/monomial.hpp"

namespace ellarr {

struct SignedTerm {
  Monomial mono;
  int coeff;  // nonzero
};

// Distinct monomials, ascending, nonzero coefficients.  All terms of one
// combination share a bidegree here (relations are bihomogeneous).
using SignedCombination = std::vector<SignedTerm>;

// Ideal generators: for every edge e the relations ω_e x_e and ω_e y_e with
// x_e, y_e expanded through the forest paths (2|E| relations, edge order,
// x before y), then one boundary Σ_i (−1)^i ω_{C∖e_i} per circuit in
// canonical circuit order, products sorted with Koszul signs.
std::vector<SignedCombination> build_relations(const Graph& g,
                                               const OrientedForest& f,
                                               const std::vector<Circuit>& cs);

}  // namespace ellarr
