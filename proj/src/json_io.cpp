#include "ellarr/json_io.hpp"

#include <utility>

#include "ellarr/errors.hpp"

namespace ellarr {

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return json{{"n", g.n}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return make_graph(j.at("n").get<int>(), std::move(edges));
}

json to_json(const BivariatePolynomial& p) {
  json terms = json::array();
  for (const auto& [key, c] : p.terms())
    terms.push_back({key.first, key.second, c.get_str()});
  return terms;
}

BivariatePolynomial bipoly_from_json(const json& j) {
  BivariatePolynomial p;
  for (const auto& t : j)
    p.add_term(t.at(0).get<int>(), t.at(1).get<int>(),
               mpz_class(t.at(2).get<std::string>()));
  return p;
}

json to_json(const LaurentPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, c.get_str()});
  return terms;
}

LaurentPolynomial laurent_from_json(const json& j) {
  LaurentPolynomial p;
  for (const auto& t : j)
    p.add_term(t.at(0).get<int>(), mpq_class(t.at(1).get<std::string>()));
  return p;
}

json to_json(const HodgeTable& t) {
  json entries = json::array();
  for (const auto& [pq, v] : t.entries())
    entries.push_back({pq.first, pq.second, v});
  json out{{"k", t.k()}, {"entries", std::move(entries)}};
  if (t.partial()) {
    out["betti"] = nullptr;
  } else {
    out["betti"] = t.betti();
  }
  out["partial"] = t.partial();
  return out;
}

HodgeTable hodge_table_from_json(const json& j) {
  HodgeTable t(j.at("k").get<int>());
  for (const auto& e : j.at("entries"))
    t.set(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<uint64_t>());
  return t;
}

json to_json(const CompareVerdict& v) {
  json out{{"tutte_equal", v.tutte_equal},
           {"e2_equal", v.e2_equal},
           {"e3_equal", v.e3_equal}};
  if (v.first_divergence) {
    const Divergence& d = *v.first_divergence;
    out["first_divergence"] = json{{"p", d.bg.p},
                                   {"q", d.bg.q},
                                   {"left", d.left},
                                   {"right", d.right}};
  } else {
    out["first_divergence"] = nullptr;
  }
  return out;
}

}  // namespace ellarr
