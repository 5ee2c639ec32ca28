#include "ellarr/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>

#include "ellarr/errors.hpp"

namespace ellarr {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n + 1) {
    for (int i = 0; i <= n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

int count_components(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n == 0) return 0;
  Dsu d(n);
  int comps = n;
  for (auto [u, v] : edges)
    if (u != v && d.unite(u, v)) --comps;
  return comps;
}

}  // namespace

int Graph::components() const { return count_components(n, edges); }
int MultiGraph::components() const { return count_components(n, edges); }

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u == v)
      fail(errc::loop, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1)
      fail(errc::bad_token, "vertex labels must be positive");
    if (!seen.insert({u, v}).second)
      fail(errc::duplicate_edge, "edge {" + std::to_string(u) + "," +
                                     std::to_string(v) + "} repeated");
    n = std::max(n, v);
  }
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

Graph parse_graph(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int header_n = 0;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;
    if (size_t h = line.find('#'); h != std::string_view::npos)
      line = line.substr(0, h);
    std::vector<std::string> toks;
    {
      std::istringstream is{std::string(line)};
      std::string t;
      while (is >> t) toks.push_back(t);
    }
    if (toks.empty()) continue;
    auto context = [&] { return " on line " + std::to_string(lineno); };
    if (toks[0] == "n") {
      if (toks.size() != 2 || header_n != 0 || !edges.empty())
        fail(errc::bad_token, "bad header" + context());
      toks.erase(toks.begin());
      int v = 0;
      auto [p, ec] = std::from_chars(toks[0].data(),
                                     toks[0].data() + toks[0].size(), v);
      if (ec != std::errc{} || p != toks[0].data() + toks[0].size() || v < 1)
        fail(errc::bad_token, "bad vertex count" + context());
      header_n = v;
      continue;
    }
    if (toks.size() != 2)
      fail(errc::bad_token, "expected \"u v\"" + context());
    int uv[2];
    for (int i = 0; i < 2; ++i) {
      auto [p, ec] = std::from_chars(toks[i].data(),
                                     toks[i].data() + toks[i].size(), uv[i]);
      if (ec != std::errc{} || p != toks[i].data() + toks[i].size() ||
          uv[i] < 1)
        fail(errc::bad_token, "bad vertex label '" + toks[i] + "'" + context());
    }
    edges.emplace_back(uv[0], uv[1]);
  }
  Graph g = make_graph(header_n, std::move(edges));
  if (header_n && g.n > header_n)
    fail(errc::bad_token, "header vertex count " + std::to_string(header_n) +
                              " smaller than max label " + std::to_string(g.n));
  return g;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_token, "cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return make_graph(n, std::move(e));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return make_graph(n, std::move(e));
}

// Vertices a..h of the drawings mapped to 1..8 in order.
const std::vector<std::pair<int, int>> schwarzler1_edges = {
    {7, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6},
    {6, 7}, {7, 8}, {8, 2}, {2, 5}, {5, 8}};
const std::vector<std::pair<int, int>> schwarzler2_edges = {
    {7, 1}, {1, 2}, {2, 4}, {4, 5}, {5, 7}, {7, 8},
    {8, 2}, {2, 5}, {5, 3}, {3, 6}, {6, 8}};

std::optional<int> suffix_number(std::string_view name,
                                 std::string_view prefix) {
  if (!name.starts_with(prefix)) return std::nullopt;
  auto rest = name.substr(prefix.size());
  int v = 0;
  auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
  if (ec != std::errc{} || p != rest.data() + rest.size()) return std::nullopt;
  return v;
}

}  // namespace

bool is_builtin(std::string_view name) {
  if (name == "k3" || name == "k4" || name == "schwarzler1" ||
      name == "schwarzler2")
    return true;
  if (auto n = suffix_number(name, "path_")) return *n >= 2;
  if (auto n = suffix_number(name, "cycle_")) return *n >= 3;
  return false;
}

Graph builtin_graph(std::string_view name) {
  if (name == "k3") return complete_graph(3);
  if (name == "k4") return complete_graph(4);
  if (name == "schwarzler1") return make_graph(8, schwarzler1_edges);
  if (name == "schwarzler2") return make_graph(8, schwarzler2_edges);
  if (auto n = suffix_number(name, "path_"); n && *n >= 2)
    return path_graph(*n);
  if (auto n = suffix_number(name, "cycle_"); n && *n >= 3)
    return cycle_graph(*n);
  fail(errc::bad_token, "unknown built-in graph: " + std::string(name));
}

OrientedForest spanning_forest(const Graph& g) {
  OrientedForest f;
  f.rank_of.assign(g.m(), -1);
  Dsu d(g.n);
  for (int i = 0; i < g.m(); ++i) {
    auto [u, v] = g.edges[i];
    if (d.unite(u, v)) {
      f.rank_of[i] = static_cast<int>(f.edges.size());
      f.edges.push_back(i);
    }
  }
  // forest adjacency for path searches
  std::vector<std::vector<std::pair<int, int>>> adj(g.n + 1);  // (vertex, edge)
  for (int i : f.edges) {
    auto [u, v] = g.edges[i];
    adj[u].emplace_back(v, i);
    adj[v].emplace_back(u, i);
  }
  f.path.resize(g.m());
  for (int i = 0; i < g.m(); ++i) {
    if (f.rank_of[i] >= 0) {
      f.path[i] = {{i, +1}};
      continue;
    }
    auto [u, v] = g.edges[i];
    // BFS from u to v within the forest
    std::vector<std::pair<int, int>> prev(g.n + 1, {0, -1});  // (vertex, edge)
    std::vector<char> seen(g.n + 1, 0);
    std::queue<int> q;
    q.push(u);
    seen[u] = 1;
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      if (a == v) break;
      for (auto [b, e] : adj[a]) {
        if (!seen[b]) {
          seen[b] = 1;
          prev[b] = {a, e};
          q.push(b);
        }
      }
    }
    std::vector<std::pair<int, int>> steps;
    for (int cur = v; cur != u;) {
      auto [a, e] = prev[cur];
      steps.emplace_back(e, g.edges[e] == std::pair(a, cur) ? +1 : -1);
      cur = a;
    }
    std::reverse(steps.begin(), steps.end());
    f.path[i] = std::move(steps);
  }
  return f;
}

std::vector<Circuit> enumerate_circuits(const Graph& g, std::size_t budget) {
  OrientedForest f = spanning_forest(g);
  std::vector<uint64_t> fund;
  for (int i = 0; i < g.m(); ++i) {
    if (f.in_forest(i)) continue;
    uint64_t mask = uint64_t(1) << i;
    for (auto [e, s] : f.path[i]) mask ^= uint64_t(1) << e;
    fund.push_back(mask);
  }
  size_t cyc = fund.size();
  if (cyc >= 26 || ((uint64_t(1) << cyc) - 1) > (uint64_t(64) << 20))
    fail(errc::circuit_budget_exceeded,
         "cycle space too large to enumerate (" + std::to_string(cyc) +
             " fundamental cycles)");

  std::vector<std::pair<std::vector<int>, Circuit>> found;  // (sorted key, order)
  std::set<uint64_t> seen;
  for (uint64_t bits = 1; bits < (uint64_t(1) << cyc); ++bits) {
    uint64_t mask = 0;
    for (size_t j = 0; j < cyc; ++j)
      if (bits >> j & 1) mask ^= fund[j];
    if (!mask || !seen.insert(mask).second) continue;
    std::vector<int> es;
    for (int i = 0; i < g.m(); ++i)
      if (mask >> i & 1) es.push_back(i);
    // circuit = every incident vertex has degree exactly 2, one component
    std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (other, edge)
    bool ok = true;
    for (int i : es) {
      auto [u, v] = g.edges[i];
      adj[u].emplace_back(v, i);
      adj[v].emplace_back(u, i);
    }
    for (auto& [v, nb] : adj)
      if (nb.size() != 2) {
        ok = false;
        break;
      }
    if (!ok) continue;
    {
      std::set<int> comp;
      std::vector<int> stack = {adj.begin()->first};
      comp.insert(stack.back());
      while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (auto [b, e] : adj[a])
          if (comp.insert(b).second) stack.push_back(b);
      }
      if (comp.size() != adj.size()) continue;
    }
    // canonical traversal: start at the smallest edge, walk toward the
    // endpoint whose continuing edge has the smaller index
    int e0 = es[0];
    auto [u, v] = g.edges[e0];
    auto other_at = [&](int vert) {
      for (auto [b, e] : adj[vert])
        if (e != e0) return e;
      return -1;
    };
    int start = other_at(v) < other_at(u) ? v : u;
    Circuit order = {e0};
    std::set<int> used = {e0};
    int cur = start;
    while (order.size() < es.size()) {
      for (auto [b, e] : adj[cur]) {
        if (!used.count(e)) {
          order.push_back(e);
          used.insert(e);
          cur = b;
          break;
        }
      }
    }
    found.emplace_back(es, std::move(order));
    if (found.size() > budget)
      fail(errc::circuit_budget_exceeded,
           "more than " + std::to_string(budget) + " circuits");
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Circuit> out;
  out.reserve(found.size());
  for (auto& [key, order] : found) out.push_back(std::move(order));
  return out;
}

MultiGraph MultiGraph::of(const Graph& g) {
  MultiGraph mg;
  mg.n = g.n;
  mg.edges = g.edges;
  return mg;
}

std::pair<MultiGraph, MultiGraph> delete_contract(const MultiGraph& g,
                                                  int index) {
  MultiGraph del;
  del.n = g.n;
  for (int i = 0; i < g.m(); ++i)
    if (i != index) del.edges.push_back(g.edges[i]);

  MultiGraph con;
  auto [cu, cv] = g.edges[index];
  if (cu == cv) {
    // contracting a loop just removes it
    con = del;
    return {del, con};
  }
  // merge cv into cu, then renumber densely
  con.n = g.n - 1;
  auto relabel = [&](int w) {
    if (w == cv) w = cu;
    return w > cv ? w - 1 : w;
  };
  for (int i = 0; i < g.m(); ++i) {
    if (i == index) continue;
    auto [u, v] = g.edges[i];
    u = relabel(u);
    v = relabel(v);
    if (u > v) std::swap(u, v);
    con.edges.emplace_back(u, v);
  }
  return {del, con};
}

}  // namespace ellarr
