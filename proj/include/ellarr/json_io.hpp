#pragma once

#include <json.hpp>

#include "ellarr/bipoly.hpp"
#include "ellarr/compare.hpp"
#include "ellarr/graph.hpp"
#include "ellarr/hodge_table.hpp"

namespace ellarr {

// Deterministic JSON (insertion-ordered keys, fully specified array orders)
// so identical runs emit identical bytes.  Coefficients ride as decimal
// strings — they outgrow int64 quickly.
using json = nlohmann::ordered_json;

json to_json(const Graph& g);
json to_json(const BivariatePolynomial& p);
json to_json(const LaurentPolynomial& p);
json to_json(const HodgeTable& t);
json to_json(const CompareVerdict& v);

Graph graph_from_json(const json& j);
BivariatePolynomial bipoly_from_json(const json& j);
LaurentPolynomial laurent_from_json(const json& j);
HodgeTable hodge_table_from_json(const json& j);

}  // namespace ellarr
