#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>

#include "ellarr/compare.hpp"
#include "ellarr/errors.hpp"
#include "ellarr/exterior_model.hpp"
#include "ellarr/graph.hpp"
#include "ellarr/json_io.hpp"
#include "ellarr/tutte.hpp"

namespace {

using namespace ellarr;

struct RunConfig {
  uint64_t seed = 0;
  unsigned primes = 2;
  unsigned threads = 0;  // 0 = hardware concurrency
  uint64_t memory_budget = uint64_t(4) << 30;
  std::optional<int> degree_cap;
  std::optional<uint64_t> component_cap;
  unsigned retry_budget = 5;
  bool json_out = false;

  EngineOptions engine() const {
    EngineOptions eo;
    eo.seed = seed;
    eo.primes = primes;
    eo.retry_budget = retry_budget;
    eo.threads = threads;
    eo.memory_budget = memory_budget;
    eo.degree_cap = degree_cap;
    eo.component_cap = component_cap;
    return eo;
  }

  std::string text_line() const {
    std::string s = "config: seed=" + std::to_string(seed) +
                    " primes=" + std::to_string(primes) +
                    " threads=" + std::to_string(threads) +
                    " memory-budget=" + std::to_string(memory_budget);
    s += " degree-cap=";
    s += degree_cap ? std::to_string(*degree_cap) : "-";
    s += " component-cap=";
    s += component_cap ? std::to_string(*component_cap) : "-";
    s += " retry-budget=" + std::to_string(retry_budget);
    s += json_out ? " output=json" : " output=text";
    return s;
  }

  json to_json() const {
    json j{{"seed", seed},
           {"primes", primes},
           {"threads", threads},
           {"memory_budget", memory_budget}};
    j["degree_cap"] = degree_cap ? json(*degree_cap) : json(nullptr);
    j["component_cap"] = component_cap ? json(*component_cap) : json(nullptr);
    j["retry_budget"] = retry_budget;
    j["output"] = json_out ? "json" : "text";
    return j;
  }
};

Graph resolve(const std::string& ref) {
  if (!ref.empty() && ref[0] == '@') return builtin_graph(ref.substr(1));
  return load_graph(ref);
}

std::string graph_line(const std::string& ref, const Graph& g) {
  return "graph: " + ref + " (n=" + std::to_string(g.n) +
         ", m=" + std::to_string(g.m()) + ")";
}

void emit(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

void report_timings(const RunReport& rep) {
  std::fprintf(stderr, "primes:");
  for (uint32_t p : rep.primes_used) std::fprintf(stderr, " %u", p);
  std::fprintf(stderr, "\nline retries: %u\npeak row memory: %.1f MiB\n",
               rep.line_retries, double(rep.peak_bytes) / 1048576.0);
  for (const auto& b : rep.blocks)
    if (b.enabled)
      std::fprintf(stderr, "  (%d,%d) ncols=%llu e2=%llu  %.0f ms\n", b.bg.p,
                   b.bg.q, static_cast<unsigned long long>(b.ncols),
                   static_cast<unsigned long long>(b.e2), b.millis);
}

int cmd_tutte(const std::string& ref, const RunConfig& cfg) {
  Graph g = resolve(ref);
  BivariatePolynomial t = tutte(g);
  if (cfg.json_out) {
    json j{{"command", "tutte"}, {"config", cfg.to_json()}};
    j["graph"] = ellarr::to_json(g);
    j["tutte"] = ellarr::to_json(t);
    emit(j);
  } else {
    std::printf("%s\n%s\nT(x,y) = %s\n", cfg.text_line().c_str(),
                graph_line(ref, g).c_str(), t.to_string().c_str());
  }
  return 0;
}

int cmd_hodge(const std::string& ref, const RunConfig& cfg) {
  Graph g = resolve(ref);
  RunReport rep;
  HodgeTable t = e3_table(g, cfg.engine(), &rep);
  report_timings(rep);
  if (cfg.json_out) {
    json j{{"command", "hodge"}, {"config", cfg.to_json()}};
    j["graph"] = ellarr::to_json(g);
    j["table"] = ellarr::to_json(t);
    j["poincare"] = t.partial() ? json(nullptr) : ellarr::to_json(t.poincare());
    j["euler"] = t.partial() ? json(nullptr) : json(t.euler().get_str());
    j["certification"] = certification_name(rep.weakest);
    emit(j);
  } else {
    std::printf("%s\n%s\n%s", cfg.text_line().c_str(), graph_line(ref, g).c_str(),
                t.layout().c_str());
    if (t.partial()) {
      std::printf("table is partial (capped entries marked \xC2\xB7); no Betti numbers\n");
    } else {
      std::string b;
      for (uint64_t v : t.betti()) b += " " + std::to_string(v);
      std::printf("betti:%s\npoincare: %s\neuler: %s\n", b.c_str(),
                  t.poincare().to_string("t").c_str(), t.euler().get_str().c_str());
    }
    std::printf("certification: %s\n", certification_name(rep.weakest));
  }
  return t.partial() ? 3 : 0;
}

int cmd_compare(const std::string& ra, const std::string& rb,
                const RunConfig& cfg) {
  Graph a = resolve(ra), b = resolve(rb);
  CompareVerdict v = compare_graphs(a, b, cfg.engine());
  if (cfg.json_out) {
    json j{{"command", "compare"}, {"config", cfg.to_json()}};
    j["left"] = ellarr::to_json(a);
    j["right"] = ellarr::to_json(b);
    j["verdict"] = ellarr::to_json(v);
    j["table_left"] = ellarr::to_json(v.e3_left);
    j["table_right"] = ellarr::to_json(v.e3_right);
    emit(j);
  } else {
    auto yn = [](bool x) { return x ? "yes" : "no"; };
    std::printf("%s\nleft:  %s (n=%d, m=%d)\nright: %s (n=%d, m=%d)\n",
                cfg.text_line().c_str(), ra.c_str(), a.n, a.m(), rb.c_str(),
                b.n, b.m());
    std::printf("tutte_equal: %s\ne2_equal: %s\ne3_equal: %s\n",
                yn(v.tutte_equal), yn(v.e2_equal), yn(v.e3_equal));
    if (v.first_divergence) {
      const Divergence& d = *v.first_divergence;
      std::printf("first_divergence: (p=%d,q=%d) degree %d: %llu vs %llu\n",
                  d.bg.p, d.bg.q, d.bg.degree(),
                  static_cast<unsigned long long>(d.left),
                  static_cast<unsigned long long>(d.right));
    } else {
      std::printf("first_divergence: none\n");
    }
    std::printf("left table:\n%sright table:\n%s", v.e3_left.layout().c_str(),
                v.e3_right.layout().c_str());
  }
  return 0;
}

int cmd_poincare(const std::string& ref, const std::string& group,
                 const RunConfig& cfg) {
  Graph g = resolve(ref);
  GroupSpec grp = parse_group(group);
  LaurentPolynomial p;
  const char* route;
  if (grp.p == 2 && grp.q == 0) {  // compact torus: the elliptic model
    p = poincare_elliptic(g, cfg.engine());
    route = "elliptic";
  } else {
    p = poincare_noncompact(g, grp);
    route = "specialization";
  }
  if (cfg.json_out) {
    json j{{"command", "poincare"}, {"config", cfg.to_json()}};
    j["graph"] = ellarr::to_json(g);
    j["group"] = {{"p", grp.p}, {"q", grp.q}, {"route", route}};
    j["poincare"] = ellarr::to_json(p);
    emit(j);
  } else {
    std::printf("%s\n%s\ngroup: (%d,%d) via %s\npoincare: %s\n",
                cfg.text_line().c_str(), graph_line(ref, g).c_str(), grp.p,
                grp.q, route, p.to_string("t").c_str());
  }
  return 0;
}

int exit_code(errc c) {
  switch (c) {
    case errc::circuit_budget_exceeded:
    case errc::memory_budget_exceeded:
    case errc::partial_table:
      return 3;
    case errc::certification_failed:
      return 4;
    default:
      return 2;  // malformed or unsupported input
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Tutte polynomials and elliptic-arrangement cohomology "
               "tables for graphs"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string ref, ref2, group;

  auto add_common = [&](CLI::App* sub, bool engine_opts) {
    sub->add_flag("--json", cfg.json_out, "emit one JSON document on stdout");
    if (!engine_opts) return;
    sub->add_option("--seed", cfg.seed, "prime-sequence seed (default 0)");
    sub->add_option("--primes", cfg.primes,
                    "initial primes per weight line (default 2)");
    sub->add_option("--threads", cfg.threads,
                    "worker threads, 0 = hardware concurrency");
    sub->add_option("--memory-budget", cfg.memory_budget,
                    "bytes of stored elimination entries (default 4 GiB)");
    sub->add_option("--degree-cap", cfg.degree_cap,
                    "only compute table entries with p+q <= cap");
    sub->add_option("--component-cap", cfg.component_cap,
                    "skip bidegree components with more monomials than this");
    sub->add_option("--retry-budget", cfg.retry_budget,
                    "extra primes before certification gives up (default 5)");
  };

  auto* t = app.add_subcommand("tutte", "exact Tutte polynomial");
  t->add_option("graph", ref, "@builtin or edge-list file")->required();
  add_common(t, false);

  auto* h = app.add_subcommand(
      "hodge", "bigraded cohomology dimensions of the elliptic complement");
  h->add_option("graph", ref, "@builtin or edge-list file")->required();
  add_common(h, true);

  auto* c = app.add_subcommand(
      "compare", "Tutte/E2/E3 comparison verdict for two graphs");
  c->add_option("left", ref, "@builtin or edge-list file")->required();
  c->add_option("right", ref2, "@builtin or edge-list file")->required();
  add_common(c, true);

  auto* p = app.add_subcommand(
      "poincare", "Poincaré polynomial of the arrangement complement");
  p->add_option("graph", ref, "@builtin or edge-list file")->required();
  p->add_option("--group", group,
                "hyperplane | toric | elliptic | real | p,q")
      ->required();
  add_common(p, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // bad usage is an input error
  }

  if (const char* env = std::getenv("ELLARR_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (...) {
      std::fprintf(stderr, "error: ELLARR_SEED is not an integer: %s\n", env);
      return 2;
    }
  }

  try {
    if (t->parsed()) return cmd_tutte(ref, cfg);
    if (h->parsed()) return cmd_hodge(ref, cfg);
    if (c->parsed()) return cmd_compare(ref, ref2, cfg);
    if (p->parsed()) return cmd_poincare(ref, group, cfg);
  } catch (const Error& e) {
    std::fprintf(stderr, "error (%s): %s\n", errc_name(e.code()), e.what());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}
