#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcgame/game_state.hpp"
#include "mcgame/moves.hpp"

namespace mcgame {

/// Removes edge e and merges its endpoints. A contracted loop disappears
/// together with its vertex.
inline GameState contract_edge(const GameState& s, EdgeRef e) {
  if (e.cycle >= s.cycle_count() || e.index >= s.cycle(e.cycle).length())
    throw GameError("edge not found");
  std::vector<BoundaryCycle> cs;
  for (std::size_t c = 0; c < s.cycle_count(); ++c) {
    if (c != e.cycle) {
      cs.push_back(s.cycle(c));
      continue;
    }
    std::vector<Label> rest;
    for (std::size_t i = 0; i < s.cycle(c).length(); ++i)
      if (i != e.index) rest.push_back(s.cycle(c)[i]);
    if (!rest.empty()) cs.emplace_back(std::move(rest));
  }
  return GameState(std::move(cs), s.genus(), s.initial_genus(), s.next_label());
}

/// Fingerprint of a state up to cycle rotation, component order and label
/// renaming. `shape` spells the cycles with canonically renamed labels.
struct CanonicalKey {
  int genus = 0;
  std::string shape;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

inline std::string to_string(const CanonicalKey& k) {
  return "g" + std::to_string(k.genus) + ":" + k.shape;
}

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const {
    return std::hash<std::string>{}(k.shape) * 31u + static_cast<std::size_t>(k.genus);
  }
};

namespace detail {

// Edges are nodes; each has a successor along its cycle and, when its label
// is used twice, a partner. A traversal from a fixed start edge is
// deterministic, so the least code over all starts is an isomorphism
// invariant of the component.
struct EdgeGraph {
  std::vector<int> succ;
  std::vector<int> partner;
  std::vector<int> cycle_of;
  std::vector<int> cycle_start;  // first global edge id per cycle
};

inline EdgeGraph edge_graph(const GameState& s) {
  EdgeGraph g;
  std::map<Label, int> first_seen;
  for (std::size_t c = 0; c < s.cycle_count(); ++c) {
    const int base = static_cast<int>(g.succ.size());
    g.cycle_start.push_back(base);
    const int n = static_cast<int>(s.cycle(c).length());
    for (int i = 0; i < n; ++i) {
      g.succ.push_back(base + (i + 1) % n);
      g.partner.push_back(-1);
      g.cycle_of.push_back(static_cast<int>(c));
    }
    for (int i = 0; i < n; ++i) {
      const Label l = s.cycle(c)[static_cast<std::size_t>(i)];
      auto [it, fresh] = first_seen.emplace(l, base + i);
      if (!fresh) {
        g.partner[static_cast<std::size_t>(base + i)] = it->second;
        g.partner[static_cast<std::size_t>(it->second)] = base + i;
      }
    }
  }
  return g;
}

inline std::vector<int> traverse(const EdgeGraph& g, int start, std::vector<int>& order) {
  std::vector<int> id(g.succ.size(), -1);
  order.assign(1, start);
  id[static_cast<std::size_t>(start)] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int x = order[k];
    for (int y : {g.succ[static_cast<std::size_t>(x)], g.partner[static_cast<std::size_t>(x)]}) {
      if (y >= 0 && id[static_cast<std::size_t>(y)] < 0) {
        id[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
  std::vector<int> code;
  code.reserve(order.size() * 2);
  for (int x : order) {
    code.push_back(id[static_cast<std::size_t>(g.succ[static_cast<std::size_t>(x)])]);
    const int p = g.partner[static_cast<std::size_t>(x)];
    code.push_back(p < 0 ? -1 : id[static_cast<std::size_t>(p)]);
  }
  return code;
}

}  // namespace detail

inline CanonicalKey canonical_key(const GameState& s) {
  const auto g = detail::edge_graph(s);
  const std::size_t n = g.succ.size();

  // Components of the edge graph.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t e = 0; e < n; ++e) {
    if (comp[e] >= 0) continue;
    std::vector<int> stack{static_cast<int>(e)};
    comp[e] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : {g.succ[static_cast<std::size_t>(x)], g.partner[static_cast<std::size_t>(x)]})
        if (y >= 0 && comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }

  struct Best {
    std::vector<int> code;
    std::vector<int> order;
  };
  std::vector<Best> best(static_cast<std::size_t>(ncomp));
  std::vector<int> order;
  for (std::size_t e = 0; e < n; ++e) {
    auto code = detail::traverse(g, static_cast<int>(e), order);
    auto& b = best[static_cast<std::size_t>(comp[e])];
    if (b.code.empty() || code < b.code) {
      b.code = std::move(code);
      b.order = order;
    }
  }
  std::sort(best.begin(), best.end(), [](const Best& a, const Best& b) {
    if (a.code.size() != b.code.size()) return a.code.size() < b.code.size();
    return a.code < b.code;
  });

  // Render: cycles in discovery order, each started at its first discovered
  // edge, labels renamed by first appearance.
  std::string shape;
  std::map<int, int> rename;  // representative edge of a label -> new name
  int next_name = 0;
  for (const auto& b : best) {
    std::vector<bool> cycle_done(s.cycle_count(), false);
    for (int x : b.order) {
      const auto c = static_cast<std::size_t>(g.cycle_of[static_cast<std::size_t>(x)]);
      if (cycle_done[c]) continue;
      cycle_done[c] = true;
      shape += '(';
      int y = x;
      bool first = true;
      do {
        const int p = g.partner[static_cast<std::size_t>(y)];
        const int rep = p < 0 ? y : std::min(y, p);
        auto [it, fresh] = rename.emplace(rep, next_name);
        if (fresh) ++next_name;
        if (!first) shape += ' ';
        first = false;
        shape += std::to_string(it->second);
        y = g.succ[static_cast<std::size_t>(y)];
      } while (y != x);
      shape += ')';
    }
  }
  return {s.genus(), shape};
}

/// Keeps the edges selected by `keep` (one flag per edge, cycle by cycle),
/// contracting all others.
inline GameState reduce(const GameState& s, const std::vector<bool>& keep) {
  std::vector<BoundaryCycle> cs;
  std::size_t k = 0;
  for (const auto& c : s.cycles()) {
    std::vector<Label> rest;
    for (Label l : c.edges())
      if (keep[k++]) rest.push_back(l);
    if (!rest.empty()) cs.emplace_back(std::move(rest));
  }
  return GameState(std::move(cs), s.genus(), s.initial_genus(), s.next_label());
}

/// Shapes of all reductions of a state with a given number of surviving
/// edges, computed once per (state, edge count).
class ReductionCache {
 public:
  const std::unordered_set<std::string>& shapes(const GameState& earlier, std::size_t kept) {
    auto key = std::make_pair(canonical_key(earlier).shape, kept);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto& out = cache_[key];
    const std::size_t n = earlier.edge_count();
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(kept), true);
    // prev_permutation walks every subset of size `kept` exactly once.
    do {
      out.insert(canonical_key(reduce(earlier, mask)).shape);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
  }

 private:
  std::map<std::pair<std::string, std::size_t>, std::unordered_set<std::string>> cache_;
};

namespace detail {
inline std::size_t doubled_labels(const GameState& s) {
  std::size_t n = 0;
  for (const auto& [l, c] : s.label_counts()) n += c == 2;
  return n;
}
}  // namespace detail

/// candidate ≼ earlier: the candidate is equivalent to the earlier state
/// with some edges contracted and the genus counter possibly lowered.
inline bool precedes(const GameState& candidate, const GameState& earlier,
                     ReductionCache* cache = nullptr) {
  if (candidate.genus() > earlier.genus()) return false;
  const std::size_t ke = candidate.edge_count();
  if (ke > earlier.edge_count()) return false;
  if (value(candidate) > value(earlier)) return false;
  if (detail::doubled_labels(candidate) > detail::doubled_labels(earlier)) return false;
  const auto target = canonical_key(candidate).shape;
  if (cache) return cache->shapes(earlier, ke).contains(target);
  ReductionCache local;
  return local.shapes(earlier, ke).contains(target);
}

/// Every state reached so far in a play, the current one last.
struct History {
  std::vector<GameState> states;
  std::vector<CanonicalKey> keys;

  History() = default;
  explicit History(const GameState& start) { push(start); }

  void push(const GameState& s) {
    states.push_back(s);
    keys.push_back(canonical_key(s));
  }
  const GameState& current() const { return states.back(); }
};

/// Restricted Cutter's replies: the restricted moves whose result is not
/// equivalent to a reduction of any state in the history.
inline std::vector<CutterReply> legal_replies(const History& history, const MarkedState& marked,
                                              ReductionCache* cache = nullptr) {
  if (history.states.empty() || history.keys.back() != canonical_key(marked.state()))
    throw GameError("history does not end at the marked state");
  std::vector<CutterReply> out;
  for (auto& r : cutter_replies(marked)) {
    bool forbidden = false;
    for (const auto& earlier : history.states)
      if (precedes(r.next, earlier, cache)) {
        forbidden = true;
        break;
      }
    if (!forbidden) out.push_back(std::move(r));
  }
  return out;
}

/// Replies that raise the value by one. When every earlier state has value
/// at most the current one (true along any play that starts from the empty
/// state or a seed and only uses legal replies), this is exactly the legal set.
inline std::vector<CutterReply> value_increasing_replies(const MarkedState& marked) {
  const auto v = value(marked.state());
  std::vector<CutterReply> out;
  for (auto& r : cutter_replies(marked))
    if (value(r.next) > v) out.push_back(std::move(r));
  return out;
}

enum class Legality { reductions, value_increase };

inline std::vector<CutterReply> legal_replies(const History& history, const MarkedState& marked,
                                              Legality mode, ReductionCache* cache = nullptr) {
  if (mode == Legality::reductions) return legal_replies(history, marked, cache);
  return value_increasing_replies(marked);
}

}  // namespace mcgame
