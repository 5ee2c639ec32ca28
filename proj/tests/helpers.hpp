#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ellarr/graph.hpp"
#include "ellarr/sparse.hpp"

namespace testing {

// Connected simple graph: random spanning tree first, then extra edges drawn
// from the remaining pairs.  Deterministic in the rng state.
inline ellarr::Graph random_connected_graph(std::mt19937& rng, int n,
                                            int extra_edges) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) {
    int a = order[i];
    int b = order[std::uniform_int_distribution<int>(0, i - 1)(rng)];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::vector<std::pair<int, int>> pool;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) ==
          edges.end())
        pool.emplace_back(u, v);
  std::shuffle(pool.begin(), pool.end(), rng);
  for (int i = 0; i < extra_edges && i < static_cast<int>(pool.size()); ++i)
    edges.push_back(pool[i]);
  std::shuffle(edges.begin(), edges.end(), rng);
  return ellarr::make_graph(n, std::move(edges));
}

// Spanning-tree count by the matrix-tree theorem: determinant of the reduced
// Laplacian, exact over mpz by fraction-free elimination.
inline mpz_class kirchhoff_tree_count(const ellarr::Graph& g) {
  int n = g.n;
  if (n <= 1) return 1;
  std::vector<std::vector<mpz_class>> a(n - 1,
                                        std::vector<mpz_class>(n - 1, 0));
  for (auto [u, v] : g.edges) {
    int i = u - 1, j = v - 1;
    if (i < n - 1) a[i][i] += 1;
    if (j < n - 1) a[j][j] += 1;
    if (i < n - 1 && j < n - 1) {
      a[i][j] -= 1;
      a[j][i] -= 1;
    }
  }
  // Bareiss determinant
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < n - 1; ++r)
        if (a[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int r = k + 1; r < n - 1; ++r)
      for (int c = k + 1; c < n - 1; ++c) {
        a[r][c] = a[k][k] * a[r][c] - a[r][k] * a[k][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 2][n - 2];
}

// Circuits by brute force: minimal edge subsets that contain a cycle.
inline std::vector<std::vector<int>> brute_force_circuit_sets(
    const ellarr::Graph& g) {
  int m = g.m();
  auto dependent = [&](unsigned mask) {
    std::vector<int> parent(g.n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      int a = find(g.edges[e].first), b = find(g.edges[e].second);
      if (a == b) return true;
      parent[a] = b;
    }
    return false;
  };
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    if (!dependent(mask)) continue;
    bool minimal = true;
    for (int e = 0; e < m && minimal; ++e)
      if (mask >> e & 1) minimal = !dependent(mask & ~(1u << e));
    if (!minimal) continue;
    std::vector<int> edges;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) edges.push_back(e);
    out.push_back(std::move(edges));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline ellarr::SparseMatrix random_sparse_matrix(std::mt19937& rng, int rows,
                                                 int cols, double density,
                                                 int lo = -9, int hi = 9) {
  ellarr::SparseMatrix m;
  m.cols = cols;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> val(lo, hi);
  for (int r = 0; r < rows; ++r) {
    std::vector<std::pair<uint32_t, int64_t>> row;
    for (int c = 0; c < cols; ++c) {
      if (coin(rng) >= density) continue;
      int v = val(rng);
      if (v) row.emplace_back(c, v);
    }
    m.add_row(std::move(row));
  }
  return m;
}

}  // namespace testing
