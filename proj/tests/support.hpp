#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mcgame/equivalence.hpp"
#include "mcgame/game_state.hpp"
#include "mcgame/moves.hpp"

namespace testing_support {

using namespace mcgame;

// Random proper state: every label used once or twice.
inline GameState random_state(std::mt19937_64& rng, int max_cycles = 3, int max_len = 5, int max_g0 = 3,
                              int pair_percent = 50) {
  std::uniform_int_distribution<int> ncyc(1, max_cycles), len(1, max_len), pct(0, 99);
  const int c = ncyc(rng);
  std::vector<int> lengths;
  int total = 0;
  for (int i = 0; i < c; ++i) {
    lengths.push_back(len(rng));
    total += lengths.back();
  }
  std::vector<int> slots(static_cast<std::size_t>(total));
  for (int i = 0; i < total; ++i) slots[static_cast<std::size_t>(i)] = i;
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::uint32_t> label(static_cast<std::size_t>(total));
  std::uint32_t next = 0;
  for (std::size_t k = 0; k < slots.size();) {
    if (k + 1 < slots.size() && pct(rng) < pair_percent) {
      label[static_cast<std::size_t>(slots[k])] = label[static_cast<std::size_t>(slots[k + 1])] = next++;
      k += 2;
    } else {
      label[static_cast<std::size_t>(slots[k])] = next++;
      k += 1;
    }
  }
  std::vector<std::vector<std::uint32_t>> cycles;
  int at = 0;
  for (int l : lengths) {
    cycles.emplace_back(label.begin() + at, label.begin() + at + l);
    at += l;
  }
  const int g0 = std::uniform_int_distribution<int>(0, max_g0)(rng);
  const int g = std::uniform_int_distribution<int>(0, g0)(rng);
  return GameState::from_ids(cycles, g, g0);
}

// Relabel with a random injective map, rotate every cycle and shuffle the
// cycle order.
inline GameState scramble(const GameState& s, std::mt19937_64& rng) {
  std::vector<std::uint32_t> ids;
  for (const auto& [l, n] : s.label_counts()) ids.push_back(l.id);
  std::vector<std::uint32_t> fresh(ids.size());
  for (std::size_t i = 0; i < fresh.size(); ++i) fresh[i] = static_cast<std::uint32_t>(100 + 3 * i);
  std::shuffle(fresh.begin(), fresh.end(), rng);
  std::map<std::uint32_t, std::uint32_t> m;
  for (std::size_t i = 0; i < ids.size(); ++i) m[ids[i]] = fresh[i];
  std::vector<std::vector<std::uint32_t>> cycles;
  for (const auto& c : s.cycles()) {
    std::vector<std::uint32_t> ls;
    const auto r = std::uniform_int_distribution<std::size_t>(0, c.length() - 1)(rng);
    for (std::size_t i = 0; i < c.length(); ++i) ls.push_back(m[c[i + r].id]);
    cycles.push_back(ls);
  }
  std::shuffle(cycles.begin(), cycles.end(), rng);
  return GameState::from_ids(cycles, s.genus(), s.initial_genus());
}

// Brute-force search for a label bijection plus cycle matching that turns a
// into b (rotations allowed, reversal not).
inline std::optional<std::map<Label, Label>> find_bijection(const GameState& a, const GameState& b) {
  if (a.genus() != b.genus() || a.cycle_count() != b.cycle_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  std::vector<bool> used(b.cycle_count(), false);
  std::map<Label, Label> fwd, back;
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == a.cycle_count()) return true;
    const auto& ca = a.cycle(i);
    for (std::size_t j = 0; j < b.cycle_count(); ++j) {
      if (used[j] || b.cycle(j).length() != ca.length()) continue;
      for (std::size_t r = 0; r < ca.length(); ++r) {
        auto f2 = fwd;
        auto b2 = back;
        bool ok = true;
        for (std::size_t k = 0; k < ca.length() && ok; ++k) {
          const Label x = ca[k], y = b.cycle(j)[k + r];
          auto fx = f2.find(x);
          auto by = b2.find(y);
          if (fx == f2.end() && by == b2.end()) {
            f2[x] = y;
            b2[y] = x;
          } else {
            ok = fx != f2.end() && by != b2.end() && fx->second == y && by->second == x;
          }
        }
        if (!ok) continue;
        std::swap(f2, fwd);
        std::swap(b2, back);
        used[j] = true;
        if (go(i + 1)) return true;
        used[j] = false;
        std::swap(f2, fwd);
        std::swap(b2, back);
      }
    }
    return false;
  };
  if (go(0)) return fwd;
  return std::nullopt;
}

inline GameState with_genus(const GameState& s, int g) {
  return GameState(s.cycles(), g, s.initial_genus(), s.next_label());
}

// All states reachable from s by contracting edges one at a time.
inline std::vector<GameState> all_reductions(const GameState& s) {
  std::vector<GameState> out{s};
  std::set<std::string> seen{to_string(s)};
  for (std::size_t k = 0; k < out.size(); ++k) {
    const GameState cur = out[k];
    for (std::size_t c = 0; c < cur.cycle_count(); ++c)
      for (std::size_t i = 0; i < cur.cycle(c).length(); ++i) {
        auto next = contract_edge(cur, {c, i});
        if (seen.insert(to_string(next)).second) out.push_back(next);
      }
  }
  return out;
}

// candidate ≼ earlier, decided by explicit witnesses.
inline bool precedes_oracle(const GameState& candidate, const GameState& earlier) {
  if (candidate.genus() > earlier.genus()) return false;
  for (const auto& r : all_reductions(earlier))
    if (find_bijection(candidate, with_genus(r, candidate.genus()))) return true;
  return false;
}

inline MarkedState random_mark(const GameState& s, std::mt19937_64& rng) {
  auto marks = enumerate_marker_moves(s);
  return marks[std::uniform_int_distribution<std::size_t>(0, marks.size() - 1)(rng)];
}

}  // namespace testing_support
