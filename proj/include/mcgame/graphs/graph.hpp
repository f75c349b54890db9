#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcgame::graphs {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)), matrix_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw GraphError("negative vertex count");
  }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw GraphError("loops are not allowed");
    if (adjacent(u, v)) return;
    matrix_[idx(u, v)] = matrix_[idx(v, u)] = 1;
    insert(adj_[static_cast<std::size_t>(u)], v);
    insert(adj_[static_cast<std::size_t>(v)], u);
    ++m_;
  }

  int n() const { return n_; }
  int edge_count() const { return m_; }
  bool adjacent(int u, int v) const { return matrix_[idx(u, v)] != 0; }
  const std::vector<int>& neighbours(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : neighbours(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.matrix_ == b.matrix_; }

 private:
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
  void check(int v) const {
    if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
  static void insert(std::vector<int>& list, int v) { list.insert(std::upper_bound(list.begin(), list.end(), v), v); }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<unsigned char> matrix_;
};

inline std::vector<int> distances_from(const Graph& g, int s) {
  std::vector<int> d(static_cast<std::size_t>(g.n()), -1);
  std::deque<int> q{s};
  d[static_cast<std::size_t>(s)] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.neighbours(u))
      if (d[static_cast<std::size_t>(v)] < 0) {
        d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
        q.push_back(v);
      }
  }
  return d;
}

/// dist[u][v]; -1 when v is unreachable from u.
inline std::vector<std::vector<int>> all_distances(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (int v = 0; v < g.n(); ++v) out.push_back(distances_from(g, v));
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  const auto d = distances_from(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

inline void require_connected(const Graph& g) {
  if (g.n() == 0 || !is_connected(g)) throw GraphError("graph must be connected and nonempty");
}

/// Every shortest path (as a vertex list) between every ordered pair u <= v.
inline std::vector<std::vector<int>> all_geodesics(const Graph& g) {
  const auto d = all_distances(g);
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u; v < g.n(); ++v) {
      if (d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] < 0) continue;
      path.assign(1, u);
      auto extend = [&](auto&& self, int x) -> void {
        if (x == v) {
          out.push_back(path);
          return;
        }
        for (int y : g.neighbours(x))
          if (d[static_cast<std::size_t>(y)][static_cast<std::size_t>(v)] ==
              d[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)] - 1) {
            path.push_back(y);
            self(self, y);
            path.pop_back();
          }
      };
      extend(extend, u);
    }
  }
  return out;
}

// ---------------------------------------------------------------- families

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace mcgame::graphs
