#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "mcgame/graphs/graph.hpp"

namespace mcgame::graphs {

/// One cop guarding a shortest path by shadowing the robber: the cop aims
/// for the path vertex p_i with i = min(d(p_0, r), m).
class GeodesicGuard {
 public:
  GeodesicGuard(const Graph& g, std::vector<int> path) : g_(g), path_(std::move(path)) {
    require_connected(g_);
    if (path_.empty()) throw GraphError("empty path");
    dist_ = all_distances(g_);
    on_path_.assign(static_cast<std::size_t>(g_.n()), -1);
    for (std::size_t i = 0; i < path_.size(); ++i) {
      if (on_path_[static_cast<std::size_t>(path_[i])] >= 0) throw GraphError("path repeats a vertex");
      on_path_[static_cast<std::size_t>(path_[i])] = static_cast<int>(i);
      if (i > 0 && !g_.adjacent(path_[i - 1], path_[i])) throw GraphError("path is not a walk in the graph");
    }
    if (d(path_.front(), path_.back()) != static_cast<int>(path_.size()) - 1)
      throw GraphError("path is not a shortest path");
  }

  const std::vector<int>& path() const { return path_; }
  int index_on_path(int v) const { return on_path_[static_cast<std::size_t>(v)]; }

  /// The robber's projection onto the path.
  int shadow(int robber) const {
    const int m = static_cast<int>(path_.size()) - 1;
    return path_[static_cast<std::size_t>(std::min(d(path_.front(), robber), m))];
  }

  /// The cop's move from `cop` against a robber on `robber`.
  int cop_move(int cop, int robber) const {
    if (cop == robber || g_.adjacent(cop, robber)) return robber;
    const int target = shadow(robber);
    if (cop == target) return cop;
    const int i = index_on_path(cop);
    if (i >= 0) {
      const int t = index_on_path(target);
      return path_[static_cast<std::size_t>(i + (t > i ? 1 : -1))];
    }
    // Off the path: walk to the nearest path vertex.
    for (int v : g_.neighbours(cop))
      if (to_path(v) < to_path(cop)) return v;
    return cop;
  }

  /// Exhaustive check of the guarantee: (1) from every guarded position
  /// the robber cannot enter the path uncaught and the cop stays on the
  /// shadow; (2) from every position the cop reaches a guarded position or
  /// a capture whatever the robber does.
  struct Audit {
    bool closed = true;
    bool positioning_terminates = true;
    std::size_t positions = 0;
    std::string failure;
    bool ok() const { return closed && positioning_terminates; }
  };

  Audit audit() const {
    Audit a;
    const int n = g_.n();
    auto moves = [&](int r) {
      std::vector<int> out{r};
      for (int v : g_.neighbours(r)) out.push_back(v);
      return out;
    };
    // (1) Robber to move, cop on the shadow.
    for (int r = 0; r < n; ++r) {
      const int c = shadow(r);
      if (c == r) continue;
      ++a.positions;
      for (int r2 : moves(r)) {
        if (r2 == c) continue;
        const int c2 = cop_move(c, r2);
        if (c2 == r2) continue;
        if (index_on_path(r2) >= 0 || c2 != shadow(r2)) {
          a.closed = false;
          a.failure = "robber " + std::to_string(r) + "->" + std::to_string(r2) + " escapes the shadow";
          return a;
        }
      }
    }
    // (2) Least fixpoint of cop-to-move positions that force guarding.
    std::vector<unsigned char> win(static_cast<std::size_t>(n) * n, 0);
    for (bool changed = true; changed;) {
      changed = false;
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
          auto& w = win[static_cast<std::size_t>(c) * n + r];
          if (w) continue;
          const int c2 = cop_move(c, r);
          bool good = c2 == r || c2 == shadow(r);
          if (!good) {
            good = true;
            for (int r2 : moves(r))
              if (r2 != c2 && !win[static_cast<std::size_t>(c2) * n + r2]) {
                good = false;
                break;
              }
          }
          if (good) {
            w = 1;
            changed = true;
          }
        }
    }
    a.positions += win.size();
    if (std::find(win.begin(), win.end(), 0) != win.end()) {
      a.positioning_terminates = false;
      a.failure = "the robber can keep the cop off the shadow forever";
    }
    return a;
  }

 private:
  int d(int u, int v) const { return dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
  int to_path(int v) const {
    int best = d(v, path_.front());
    for (int p : path_) best = std::min(best, d(v, p));
    return best;
  }

  Graph g_;
  std::vector<int> path_;
  std::vector<std::vector<int>> dist_;
  std::vector<int> on_path_;
};

inline GeodesicGuard guard_geodesic(const Graph& g, std::vector<int> path) { return GeodesicGuard(g, std::move(path)); }

}  // namespace mcgame::graphs
