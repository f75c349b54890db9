#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "mcgame/graphs/cops.hpp"
#include "mcgame/graphs/graph.hpp"

namespace mcgame::graphs {

/// For each vertex, the cyclic order of its neighbours.
using RotationSystem = std::vector<std::vector<int>>;

/// Number of faces of the embedding given by a rotation system.
inline int count_faces(const Graph& g, const RotationSystem& rot) {
  const int n = g.n();
  // Position of each neighbour inside a rotation.
  std::vector<std::vector<int>> where(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < rot[static_cast<std::size_t>(v)].size(); ++i)
      where[static_cast<std::size_t>(v)][static_cast<std::size_t>(rot[static_cast<std::size_t>(v)][i])] =
          static_cast<int>(i);
  std::vector<unsigned char> seen(static_cast<std::size_t>(n) * n, 0);
  int faces = 0;
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbours(u)) {
      if (seen[static_cast<std::size_t>(u) * n + v]) continue;
      ++faces;
      int a = u, b = v;
      while (!seen[static_cast<std::size_t>(a) * n + b]) {
        seen[static_cast<std::size_t>(a) * n + b] = 1;
        const auto& r = rot[static_cast<std::size_t>(b)];
        const int next = r[(static_cast<std::size_t>(where[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]) + 1) % r.size()];
        a = b;
        b = next;
      }
    }
  return faces;
}

inline int genus_of(const Graph& g, const RotationSystem& rot) {
  return (2 - g.n() + g.edge_count() - count_faces(g, rot)) / 2;
}

/// Π (deg(v) - 1)!, saturating at UINT64_MAX.
inline std::uint64_t rotation_count(const Graph& g) {
  std::uint64_t total = 1;
  for (int v = 0; v < g.n(); ++v)
    for (int i = 2; i < g.degree(v); ++i) {
      if (total > UINT64_MAX / static_cast<std::uint64_t>(i)) return UINT64_MAX;
      total *= static_cast<std::uint64_t>(i);
    }
  return total;
}

/// Length of a shortest cycle, 0 for a forest.
inline int girth(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> d(static_cast<std::size_t>(g.n()), -1), parent(static_cast<std::size_t>(g.n()), -1);
    std::vector<int> queue{s};
    d[static_cast<std::size_t>(s)] = 0;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const int u = queue[k];
      for (int v : g.neighbours(u)) {
        if (d[static_cast<std::size_t>(v)] < 0) {
          d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (parent[static_cast<std::size_t>(u)] != v) {
          const int len = d[static_cast<std::size_t>(u)] + d[static_cast<std::size_t>(v)] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

/// Euler lower bound: every face is bounded by at least girth(g) edges.
inline int euler_lower_bound(const Graph& g) {
  const int gi = girth(g);
  if (gi == 0) return 0;
  const int x = 2 - g.n() + g.edge_count() - 2 * g.edge_count() / gi;
  return x <= 0 ? 0 : (x + 1) / 2;
}

/// Minimum genus over all rotation systems.
inline int genus_exact(const Graph& g, std::uint64_t budget = 10'000'000) {
  require_connected(g);
  if (rotation_count(g) > budget) throw BudgetError("too many rotation systems for an exact genus");
  const int n = g.n();
  RotationSystem rot(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rot[static_cast<std::size_t>(v)] = g.neighbours(v);
  const int floor_genus = euler_lower_bound(g);
  int best = genus_of(g, rot);
  // Odometer over the rotations; the first neighbour of each vertex stays fixed.
  while (best > floor_genus) {
    int v = 0;
    for (; v < n; ++v) {
      auto& r = rot[static_cast<std::size_t>(v)];
      if (r.size() > 2 && std::next_permutation(r.begin() + 1, r.end())) break;
    }
    if (v == n) break;
    best = std::min(best, genus_of(g, rot));
  }
  return best;
}

inline bool is_planar(const Graph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph b(static_cast<std::size_t>(g.n()));
  for (auto [u, v] : g.edges()) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), b);
  return boost::boyer_myrvold_planarity_test(b);
}

}  // namespace mcgame::graphs
