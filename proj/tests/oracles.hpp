#pragma once

// Test-only reference computations. Nothing here calls into the code paths it
// is used to check: adjacency is applied through an explicitly materialized
// tensor, distances come from Floyd–Warshall, connectivity from union-find.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "hgs/hypergraph.hpp"

namespace hgs::testing {

/// Dense order-k tensor entries a_{i1..ik} = 1/(k-1)! for every ordering of
/// an edge, contracted against x in the k-1 trailing modes by enumerating all
/// n^{k-1} index tuples. Only for tiny n.
inline std::vector<double> dense_tensor_apply(const Hypergraph& h,
                                              const std::vector<double>& x) {
  const std::size_t n = h.num_vertices();
  const std::size_t k = h.uniformity();
  double fact = 1.0;
  for (std::size_t i = 2; i < k; ++i) fact *= static_cast<double>(i);
  const double entry = 1.0 / fact;

  // Edge membership lookup by sorted tuple.
  auto is_edge = [&](std::vector<Vertex> idx) {
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return false;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
      auto edge = h.edge(e);
      if (std::equal(edge.begin(), edge.end(), idx.begin())) return true;
    }
    return false;
  };

  std::vector<double> y(n, 0.0);
  std::vector<Vertex> tail(k - 1, 0);
  for (Vertex i = 0; i < n; ++i) {
    std::fill(tail.begin(), tail.end(), 0);
    for (;;) {
      std::vector<Vertex> idx{i};
      idx.insert(idx.end(), tail.begin(), tail.end());
      if (is_edge(idx)) {
        double p = entry;
        for (Vertex t : tail) p *= x[t];
        y[i] += p;
      }
      std::size_t pos = 0;
      while (pos < tail.size() && ++tail[pos] == n) tail[pos++] = 0;
      if (pos == tail.size()) break;
    }
  }
  return y;
}

/// All-pairs distances via Floyd–Warshall on the co-membership relation;
/// unreachable pairs hold SIZE_MAX.
inline std::vector<std::vector<std::size_t>> floyd_warshall(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    for (Vertex a : h.edge(e))
      for (Vertex b : h.edge(e))
        if (a != b) d[a][b] = 1;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][m] != inf && d[m][j] != inf && d[i][m] + d[m][j] < d[i][j])
          d[i][j] = d[i][m] + d[m][j];
  return d;
}

inline bool union_find_connected(const Hypergraph& h) {
  std::vector<std::size_t> parent(h.num_vertices());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto edge = h.edge(e);
    for (std::size_t i = 1; i < edge.size(); ++i) {
      parent[find(edge[i])] = find(edge[0]);
    }
  }
  std::size_t root = find(0);
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

/// Relabels vertices: new label of v is perm[v].
inline Hypergraph relabel(const Hypergraph& h, const std::vector<Vertex>& perm) {
  std::vector<Hypergraph::Edge> edges;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    Hypergraph::Edge edge;
    for (Vertex v : h.edge(e)) edge.push_back(perm[v]);
    edges.push_back(std::move(edge));
  }
  return Hypergraph(h.uniformity(), h.num_vertices(), std::move(edges));
}

inline Hypergraph graph(std::size_t n,
                        std::initializer_list<std::pair<Vertex, Vertex>> e) {
  std::vector<Hypergraph::Edge> edges;
  for (auto [a, b] : e) edges.push_back({a, b});
  return Hypergraph(2, n, std::move(edges));
}

// P3 = 1-2-3, 0-based.
inline Hypergraph path3() { return graph(3, {{0, 1}, {1, 2}}); }

}  // namespace hgs::testing
