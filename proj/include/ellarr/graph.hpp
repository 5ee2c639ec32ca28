#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ellarr {

// Simple undirected graph on vertices 1..n.  Labels not mentioned by any
// edge are isolated vertices.  Edge indices follow input order and act as
// the identity of everything downstream (forest, circuits, generators), so
// they are never reordered.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v

  int m() const { return static_cast<int>(edges.size()); }
  int components() const;
  int rank() const { return n - components(); }
  bool connected() const { return components() <= 1; }
};

// Validates simplicity (errors: loop, duplicate_edge, bad_token).
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// Edge-list text: lines "u v", '#' comments, blank lines allowed; an
// optional header line "n <count>" fixes the vertex count (otherwise the
// max label is used).
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

bool is_builtin(std::string_view name);
// k3, k4, path_N (N vertices), cycle_N, schwarzler1, schwarzler2.
Graph builtin_graph(std::string_view name);

// Spanning forest by first-fit Kruskal over edge indices, every edge
// oriented low→high vertex.  `path[e]` writes x_e in forest coordinates:
// the forest path between e's endpoints, one (forest edge, ±1) per step,
// sign −1 when the step runs against the edge's own orientation.
struct OrientedForest {
  std::vector<int> edges;    // ascending edge indices
  std::vector<int> rank_of;  // edge index -> position in `edges`, or -1
  std::vector<std::vector<std::pair<int, int>>> path;

  int size() const { return static_cast<int>(edges.size()); }
  bool in_forest(int e) const { return rank_of[e] >= 0; }
};
OrientedForest spanning_forest(const Graph& g);

// Edge indices of a circuit in traversal order, starting at the smallest
// index and heading toward its smaller-indexed neighbor.
using Circuit = std::vector<int>;

// All circuits via combinations of fundamental cycles, canonical order
// (lexicographic on sorted edge sets).  `budget` caps the circuit count.
std::vector<Circuit> enumerate_circuits(const Graph& g,
                                        std::size_t budget = 1000000);

// Contraction creates loops and parallel edges, so the Tutte recursion works
// on this looser type.  Kept internal to the recursion and its tests.
struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u <= v; u == v is a loop

  static MultiGraph of(const Graph& g);
  int m() const { return static_cast<int>(edges.size()); }
  int components() const;
  int rank() const { return n - components(); }
};

// (g − e, g / e); contraction merges the endpoints and renumbers densely.
std::pair<MultiGraph, MultiGraph> delete_contract(const MultiGraph& g,
                                                  int index);

}  // namespace ellarr
