#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "mcgame/graphs/graph.hpp"

namespace mcgame::graphs {

class BudgetError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct CopOptions {
  std::size_t max_states = 50'000'000;
  std::optional<std::uint64_t> shuffle_seed;  // randomise the sweep order
};

/// Outcome of the retrograde analysis for k cops. Cop positions are
/// multisets, listed as sorted vertex tuples.
struct CopGame {
  int k = 0;
  std::vector<std::vector<int>> configs;
  // Cops win from (config, robber) with the cops (resp. robber) to move.
  std::vector<unsigned char> cops_to_move;
  std::vector<unsigned char> robber_to_move;
  bool cops_win = false;

  std::size_t at(std::size_t config, int robber, int n) const { return config * static_cast<std::size_t>(n) + robber; }
};

namespace detail {

inline void multisets(int n, int k, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = from; v < n; ++v) {
    cur.push_back(v);
    multisets(n, k, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline CopGame solve_cops(const Graph& g, int k, const CopOptions& opts = {}) {
  require_connected(g);
  if (k < 1) throw GraphError("need at least one cop");
  const int n = g.n();

  CopGame game;
  game.k = k;
  {
    // Count before building: C(n + k - 1, k) configurations.
    double count = 1;
    for (int i = 1; i <= k; ++i) count = count * (n + k - i) / i;
    if (count * n * 2 > static_cast<double>(opts.max_states)) throw BudgetError("cop state space exceeds the budget");
  }
  std::vector<int> cur;
  detail::multisets(n, k, 0, cur, game.configs);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < game.configs.size(); ++i) index[game.configs[i]] = i;

  // Successor configurations: every cop stays or steps to a neighbour.
  std::vector<std::vector<std::size_t>> succ(game.configs.size());
  for (std::size_t i = 0; i < game.configs.size(); ++i) {
    std::vector<std::vector<int>> layer{{}};
    for (int c : game.configs[i]) {
      std::vector<std::vector<int>> next;
      for (const auto& partial : layer) {
        auto stay = partial;
        stay.push_back(c);
        next.push_back(stay);
        for (int d : g.neighbours(c)) {
          auto step = partial;
          step.push_back(d);
          next.push_back(std::move(step));
        }
      }
      layer = std::move(next);
    }
    for (auto& l : layer) {
      std::sort(l.begin(), l.end());
      succ[i].push_back(index.at(l));
    }
    std::sort(succ[i].begin(), succ[i].end());
    succ[i].erase(std::unique(succ[i].begin(), succ[i].end()), succ[i].end());
  }

  auto occupied = [&](std::size_t conf, int r) {
    return std::binary_search(game.configs[conf].begin(), game.configs[conf].end(), r);
  };

  const std::size_t total = game.configs.size() * static_cast<std::size_t>(n);
  game.cops_to_move.assign(total, 0);
  game.robber_to_move.assign(total, 0);
  for (std::size_t c = 0; c < game.configs.size(); ++c)
    for (int r = 0; r < n; ++r)
      if (occupied(c, r)) game.cops_to_move[game.at(c, r, n)] = game.robber_to_move[game.at(c, r, n)] = 1;

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::optional<std::mt19937_64> rng;
  if (opts.shuffle_seed) rng.emplace(*opts.shuffle_seed);

  for (bool changed = true; changed;) {
    changed = false;
    if (rng) std::shuffle(order.begin(), order.end(), *rng);
    for (std::size_t pos : order) {
      const std::size_t c = pos / static_cast<std::size_t>(n);
      const int r = static_cast<int>(pos % static_cast<std::size_t>(n));
      if (!game.cops_to_move[pos]) {
        for (std::size_t c2 : succ[c])
          if (game.robber_to_move[game.at(c2, r, n)]) {
            game.cops_to_move[pos] = 1;
            changed = true;
            break;
          }
      }
      if (!game.robber_to_move[pos]) {
        bool all = game.cops_to_move[pos] != 0;  // robber stays put
        for (int r2 : g.neighbours(r)) {
          if (!all) break;
          all = game.cops_to_move[game.at(c, r2, n)] != 0;
        }
        if (all) {
          game.robber_to_move[pos] = 1;
          changed = true;
        }
      }
    }
  }

  // Cops place first, then the robber picks a start, then the cops move.
  for (std::size_t c = 0; c < game.configs.size() && !game.cops_win; ++c) {
    bool all = true;
    for (int r = 0; r < n && all; ++r) all = game.cops_to_move[game.at(c, r, n)] != 0;
    game.cops_win = all;
  }
  return game;
}

inline bool cop_win(const Graph& g, int k, const CopOptions& opts = {}) { return solve_cops(g, k, opts).cops_win; }

inline int cop_number(const Graph& g, int k_max, const CopOptions& opts = {}) {
  for (int k = 1; k <= k_max; ++k)
    if (cop_win(g, k, opts)) return k;
  throw GraphError("cop number exceeds k_max = " + std::to_string(k_max));
}

}  // namespace mcgame::graphs
