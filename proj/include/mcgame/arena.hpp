#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "mcgame/configurations.hpp"
#include "mcgame/equivalence.hpp"
#include "mcgame/game_state.hpp"
#include "mcgame/moves.hpp"
#include "mcgame/potential.hpp"
#include "mcgame/strategies.hpp"

namespace mcgame {

// ---------------------------------------------------------------- bounds

inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

/// ⌊4g0/3 + 10/3⌋
inline int marker_bound(int g0) { return floor_div(4 * g0 + 10, 3); }
/// ⌈4g0/3 + 2⌉
inline int cutter_bound(int g0) { return floor_div(4 * g0 + 6 + 2, 3); }
/// ⌊4g0/3 + 7/3⌋
inline int refined_bound(int g0) { return floor_div(4 * g0 + 7, 3); }
/// ⌊4g0/3 - 1/3⌋
inline int switch_bound(int g0) { return floor_div(4 * g0 - 1, 3); }

// ---------------------------------------------------------------- records

struct Ply {
  int ply = 0;
  std::string mover;   // "start", "marker" or "cutter"
  std::string action;  // mark string or reply kind; empty for the start
  std::size_t value = 0;
  int genus = 0;
  Potential potential;
  std::string canonical_key;

  friend bool operator==(const Ply&, const Ply&) = default;
};

inline Ply make_ply(int n, std::string mover, std::string action, const GameState& s) {
  return {n, std::move(mover), std::move(action), value(s), s.genus(), state_potential(s),
          to_string(canonical_key(s))};
}

enum class Mode { marker_bound, cutter_bound, exact_value, refined };
enum class Verdict { pass, fail, inconclusive };

inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::marker_bound: return "marker_bound";
    case Mode::cutter_bound: return "cutter_bound";
    case Mode::exact_value: return "exact_value";
    case Mode::refined: return "refined";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

struct SearchBudget {
  int max_depth = 0;  // 0: bound + 1
  std::size_t max_states = 20'000'000;
  bool sampled = false;  // Marker sampling in cutter_bound mode
  std::size_t samples = 10'000;
  std::uint64_t seed = 1;
  bool memoize = true;
  Legality legality = Legality::reductions;
};

struct VerificationReport {
  int g0 = 0;
  Mode mode = Mode::marker_bound;
  int bound = 0;
  std::size_t max_value_seen = 0;
  std::size_t states_explored = 0;
  int max_depth_seen = 0;
  Verdict verdict = Verdict::pass;
  std::string failure;
  std::vector<Ply> witness;

  std::optional<int> exact_value;
  std::size_t terminal_plays = 0;
  std::size_t switch_to_cops = 0;
  std::size_t frontier = 0;  // unexplored nodes when the budget ran out
  Potential max_active_sum;
  std::map<std::string, std::size_t> transitions;  // "4-B->5" -> count
  std::optional<Potential> seed_potential;
  std::optional<Potential> min_potential_after_preparation;
  SearchBudget budget;
};

inline std::string transition_name(int from, ReplyKind k, int to) {
  return std::to_string(from) + "-" + to_string(k) + "->" + std::to_string(to);
}

/// The transitions drawn in the configuration diagram.
inline const std::set<std::string>& table_transitions() {
  static const std::set<std::string> t = [] {
    std::set<std::string> out;
    for (const auto& c : configuration_table())
      for (const auto& [k, to] : c.transitions) out.insert(transition_name(c.id, k, to));
    return out;
  }();
  return t;
}

namespace detail {

struct BudgetExceeded {};

class Search {
 public:
  Search(VerificationReport& r, const SearchBudget& b) : rep_(r), budget_(b) {
    rep_.budget = b;
    max_depth_ = b.max_depth > 0 ? b.max_depth : r.bound + 1;
  }

  void tick(int depth) {
    if (++rep_.states_explored > budget_.max_states) throw BudgetExceeded{};
    rep_.max_depth_seen = std::max(rep_.max_depth_seen, depth);
    if (depth > max_depth_) throw BudgetExceeded{};
  }

  bool failed() const { return rep_.verdict == Verdict::fail; }

  void fail(const std::string& why, const std::vector<Ply>& trace) {
    if (failed()) return;
    rep_.verdict = Verdict::fail;
    rep_.failure = why;
    rep_.witness = trace;
  }

  std::vector<CutterReply> legal(const History& h, const MarkedState& m) {
    return legal_replies(h, m, budget_.legality, &cache_);
  }

  VerificationReport& rep_;
  const SearchBudget& budget_;
  int max_depth_ = 0;
  ReductionCache cache_;
};

inline void check_phase_invariants(Search& S, const MarkerPhase& phase, const GameState& s,
                                   const std::vector<Ply>& trace) {
  if (std::holds_alternative<Preparatory>(phase)) {
    for (std::size_t c = 0; c < s.cycle_count(); ++c)
      if (s.cycle(c).length() > 2 || cycle_potential(s, c) > Potential())
        return S.fail("preparatory phase produced a long or positive cycle", trace);
    return;
  }
  const auto* pb = std::get_if<PotentialBounding>(&phase);
  if (!pb) return;
  for (auto c : positive_cycles(s))
    if (std::find(pb->active.begin(), pb->active.end(), c) == pb->active.end())
      return S.fail("passive cycle with positive potential", trace);
  const auto sum = active_sum(s);
  S.rep_.max_active_sum = std::max(S.rep_.max_active_sum, sum);
  if (sum > Potential::whole(5)) return S.fail("active potential exceeds 5", trace);
  if (sum == Potential::whole(5) && pb->config != 5 && pb->config != 9)
    return S.fail("active potential 5 outside configurations 5 and 9", trace);
}

// Marker follows the strategy; every legal reply is explored.
inline void marker_tree(Search& S, const MarkerPhase& phase, History& h, std::vector<Ply>& trace,
                        int depth, bool refined, std::size_t limit) {
  if (S.failed()) return;
  S.tick(depth);
  const GameState s = h.current();
  S.rep_.max_value_seen = std::max(S.rep_.max_value_seen, value(s));
  if (value(s) > limit) return S.fail("value " + std::to_string(value(s)) + " exceeds bound", trace);
  check_phase_invariants(S, phase, s, trace);
  if (S.failed()) return;

  std::optional<MarkerMove> move;
  try {
    if (refined) {
      auto r = refined_marker_move(phase, s);
      if (auto* sw = std::get_if<SwitchToCops>(&r)) {
        ++S.rep_.switch_to_cops;
        ++S.rep_.terminal_plays;
        if (sw->genus != 1 || static_cast<int>(sw->value) > switch_bound(S.rep_.g0))
          S.fail("switch to cops with value " + std::to_string(sw->value), trace);
        return;
      }
      move = std::get<MarkerMove>(std::move(r));
    } else {
      move = marker_move(phase, s);
    }
  } catch (const StrategyError& e) {
    return S.fail(e.what(), trace);
  }

  const auto replies = S.legal(h, move->marked);
  if (replies.empty()) {
    ++S.rep_.terminal_plays;
    return;
  }
  trace.push_back(make_ply(static_cast<int>(trace.size()), "marker", mark_string(move->marked), s));
  const auto before = state_potential(s);
  for (const auto& r : replies) {
    trace.push_back(make_ply(static_cast<int>(trace.size()), "cutter", to_string(r.kind), r.next));
    if (value(r.next) != value(s) + 1) {
      S.fail("legal reply did not raise the value by one", trace);
    } else {
      MarkerPhase next;
      bool ok = true;
      try {
        next = advance(*move, r);
      } catch (const StrategyError& e) {
        S.fail(e.what(), trace);
        ok = false;
      }
      if (ok) {
        const auto* from = std::get_if<PotentialBounding>(&move->phase);
        const auto* to = std::get_if<PotentialBounding>(&next);
        if (from && to) ++S.rep_.transitions[transition_name(from->config, r.kind, to->config)];
        const auto after = state_potential(r.next);
        if (from && after < before) S.fail("potential decreased during potential bounding", trace);
        if (!from && to && !refined) {
          if (after < Potential::whole(-5)) S.fail("potential below -5 after preparation", trace);
          auto& lo = S.rep_.min_potential_after_preparation;
          if (!lo || after < *lo) lo = after;
        }
        if (!S.failed()) {
          h.push(r.next);
          marker_tree(S, next, h, trace, depth + 1, refined, limit);
          h.states.pop_back();
          h.keys.pop_back();
        }
      }
    }
    trace.pop_back();
    if (S.failed()) return;
  }
  trace.pop_back();
}

template <class Body>
VerificationReport run(VerificationReport rep, const SearchBudget& budget, Body body) {
  Search S(rep, budget);
  try {
    body(S);
  } catch (const BudgetExceeded&) {
    if (rep.verdict != Verdict::fail) rep.verdict = Verdict::inconclusive;
    rep.frontier = 1;
  }
  return rep;
}

}  // namespace detail

/// Marker's strategy against every legal restricted-Cutter reply.
inline VerificationReport verify_marker_bound(int g0, const SearchBudget& budget = {}) {
  if (g0 < 0) throw GameError("g0 must be nonnegative");
  VerificationReport rep;
  rep.g0 = g0;
  rep.mode = Mode::marker_bound;
  rep.bound = marker_bound(g0);
  return detail::run(rep, budget, [&](detail::Search& S) {
    History h(GameState::initial(g0));
    std::vector<Ply> trace{make_ply(0, "start", "", h.current())};
    detail::marker_tree(S, initial_phase(), h, trace, 0, false, static_cast<std::size_t>(S.rep_.bound));
  });
}

/// The refined game from the seed state.
inline VerificationReport verify_refined(int g0, const SearchBudget& budget = {}) {
  if (g0 < 1) throw GameError("the refined game needs g0 >= 1");
  VerificationReport rep;
  rep.g0 = g0;
  rep.mode = Mode::refined;
  rep.bound = refined_bound(g0);
  rep.seed_potential = state_potential(refined_seed(g0));
  return detail::run(rep, budget, [&](detail::Search& S) {
    History h(refined_seed(g0));
    std::vector<Ply> trace{make_ply(0, "start", "", h.current())};
    detail::marker_tree(S, RefinedOpening{}, h, trace, 0, true, static_cast<std::size_t>(S.rep_.bound));
  });
}

namespace detail {

// One Cutter turn under the potential strategy. Returns the reply or
// records why the branch ended.
struct CutterTurn {
  std::optional<CutterReply> reply;
  bool stuck = false;  // licensed reply unavailable
};

inline CutterTurn cutter_turn(Search& S, const History& h, const MarkedState& m,
                              std::vector<Ply>& trace) {
  const auto legal = S.legal(h, m);
  const auto decision = cutter_move(legal, m);
  const auto suggested = licensed_kind(m);
  if (!decision || !decision->licensed) {
    // The only way the licensed reply can vanish is move A at genus 0.
    if (suggested == ReplyKind::A && m.state().genus() == 0) return {std::nullopt, true};
    S.fail("licensed reply " + std::string(to_string(suggested)) + " is not legal", trace);
    return {};
  }
  if (state_potential(decision->reply.next) > state_potential(m.state())) {
    S.fail("potential increased", trace);
    return {};
  }
  return {decision->reply, false};
}

inline void cutter_tree(Search& S, History& h, std::vector<Ply>& trace, int depth,
                        std::unordered_set<CanonicalKey, CanonicalKeyHash>& done) {
  if (S.failed()) return;
  S.tick(depth);
  const GameState s = h.current();
  S.rep_.max_value_seen = std::max(S.rep_.max_value_seen, value(s));
  if (static_cast<int>(value(s)) >= S.rep_.bound) {
    ++S.rep_.terminal_plays;
    return;
  }
  if (S.budget_.memoize && !done.insert(h.keys.back()).second) return;

  std::set<CanonicalKey> seen;
  for (const auto& m : enumerate_marker_moves(s)) {
    trace.push_back(make_ply(static_cast<int>(trace.size()), "marker", mark_string(m), s));
    auto turn = cutter_turn(S, h, m, trace);
    if (turn.stuck) {
      ++S.rep_.terminal_plays;
      S.fail("Cutter stuck below the bound", trace);
    }
    if (turn.reply && seen.insert(canonical_key(turn.reply->next)).second) {
      trace.push_back(
          make_ply(static_cast<int>(trace.size()), "cutter", to_string(turn.reply->kind), turn.reply->next));
      h.push(turn.reply->next);
      cutter_tree(S, h, trace, depth + 1, done);
      h.states.pop_back();
      h.keys.pop_back();
      trace.pop_back();
    }
    trace.pop_back();
    if (S.failed()) return;
  }
}

}  // namespace detail

/// Cutter's potential strategy against every Marker mark, or against
/// budget.samples random Marker plays when budget.sampled is set.
inline VerificationReport verify_cutter_bound(int g0, const SearchBudget& budget = {}) {
  if (g0 < 0) throw GameError("g0 must be nonnegative");
  VerificationReport rep;
  rep.g0 = g0;
  rep.mode = Mode::cutter_bound;
  rep.bound = cutter_bound(g0);
  return detail::run(rep, budget, [&](detail::Search& S) {
    if (!S.budget_.sampled) {
      History h(GameState::initial(g0));
      std::vector<Ply> trace{make_ply(0, "start", "", h.current())};
      std::unordered_set<CanonicalKey, CanonicalKeyHash> done;
      detail::cutter_tree(S, h, trace, 0, done);
      return;
    }
    std::mt19937_64 rng(S.budget_.seed);
    for (std::size_t play = 0; play < S.budget_.samples && !S.failed(); ++play) {
      History h(GameState::initial(g0));
      std::vector<Ply> trace{make_ply(0, "start", "", h.current())};
      for (int depth = 0;; ++depth) {
        S.tick(depth);
        const GameState s = h.current();
        S.rep_.max_value_seen = std::max(S.rep_.max_value_seen, value(s));
        if (static_cast<int>(value(s)) >= S.rep_.bound) break;
        const auto marks = enumerate_marker_moves(s);
        std::uniform_int_distribution<std::size_t> pick(0, marks.size() - 1);
        const auto& m = marks[pick(rng)];
        trace.push_back(make_ply(static_cast<int>(trace.size()), "marker", mark_string(m), s));
        auto turn = detail::cutter_turn(S, h, m, trace);
        if (turn.stuck) S.fail("Cutter stuck below the bound", trace);
        if (!turn.reply) break;
        trace.push_back(
            make_ply(static_cast<int>(trace.size()), "cutter", to_string(turn.reply->kind), turn.reply->next));
        h.push(turn.reply->next);
      }
      ++S.rep_.terminal_plays;
    }
  });
}

namespace detail {

class ExactSolver {
 public:
  ExactSolver(Search& S, int threshold) : S_(S), t_(threshold) {}

  // Marker can keep the value at most t until Cutter runs out of replies.
  bool wins(History& h, int depth) {
    const GameState s = h.current();
    if (static_cast<int>(value(s)) > t_) return false;
    S_.tick(depth);
    const auto key = h.keys.back();
    if (S_.budget_.memoize) {
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    bool result = false;
    std::set<std::vector<CanonicalKey>> tried;
    for (const auto& m : enumerate_marker_moves(s)) {
      const auto replies = S_.legal(h, m);
      std::vector<CanonicalKey> outcome;
      for (const auto& r : replies) outcome.push_back(canonical_key(r.next));
      std::sort(outcome.begin(), outcome.end());
      if (!tried.insert(outcome).second) continue;
      bool all = true;
      for (const auto& r : replies) {
        if (static_cast<int>(value(r.next)) > t_) {
          all = false;
          break;
        }
        h.push(r.next);
        const bool w = wins(h, depth + 1);
        h.states.pop_back();
        h.keys.pop_back();
        if (!w) {
          all = false;
          break;
        }
      }
      if (all) {
        result = true;
        break;
      }
    }
    if (S_.budget_.memoize) memo_[key] = result;
    return result;
  }

 private:
  Search& S_;
  int t_;
  std::unordered_map<CanonicalKey, bool, CanonicalKeyHash> memo_;
};

}  // namespace detail

/// Least t such that Marker keeps the value at most t; threshold iteration
/// up to the Marker bound.
inline VerificationReport exact_value(int g0, const SearchBudget& budget = {}) {
  if (g0 < 0) throw GameError("g0 must be nonnegative");
  VerificationReport rep;
  rep.g0 = g0;
  rep.mode = Mode::exact_value;
  rep.bound = marker_bound(g0);
  SearchBudget b = budget;
  if (b.max_depth == 0) b.max_depth = rep.bound + 1;
  return detail::run(rep, b, [&](detail::Search& S) {
    for (int t = 0; t <= S.rep_.bound; ++t) {
      detail::ExactSolver solver(S, t);
      History h(GameState::initial(g0));
      if (solver.wins(h, 0)) {
        S.rep_.exact_value = t;
        S.rep_.max_value_seen = static_cast<std::size_t>(t);
        if (t < cutter_bound(g0)) S.fail("value below the Cutter bound", {});
        return;
      }
    }
    S.fail("Marker cannot hold the Marker bound", {});
  });
}

// ---------------------------------------------------------------- plays

enum class MarkerPolicy { strategy, random };
enum class CutterPolicy { strategy, random, first };

/// One play from the empty state (or the refined seed) recorded ply by ply.
inline std::vector<Ply> play(int g0, MarkerPolicy marker, CutterPolicy cutter, std::uint64_t seed,
                             bool refined = false, Legality legality = Legality::reductions) {
  std::mt19937_64 rng(seed);
  History h(refined ? refined_seed(g0) : GameState::initial(g0));
  std::vector<Ply> trace{make_ply(0, "start", "", h.current())};
  MarkerPhase phase = refined ? MarkerPhase{RefinedOpening{}} : initial_phase();
  ReductionCache cache;
  for (;;) {
    const GameState s = h.current();
    std::optional<MarkerMove> move;
    if (marker == MarkerPolicy::strategy) {
      if (std::holds_alternative<Terminal>(phase)) break;
      if (refined) {
        auto r = refined_marker_move(phase, s);
        if (std::holds_alternative<SwitchToCops>(r)) break;
        move = std::get<MarkerMove>(std::move(r));
      } else {
        move = marker_move(phase, s);
      }
    } else {
      const auto marks = enumerate_marker_moves(s);
      std::uniform_int_distribution<std::size_t> pick(0, marks.size() - 1);
      move = MarkerMove{marks[pick(rng)], {}, phase};
    }
    const auto legal = legal_replies(h, move->marked, legality, &cache);
    if (legal.empty()) break;
    trace.push_back(make_ply(static_cast<int>(trace.size()), "marker", mark_string(move->marked), s));
    CutterReply reply;
    if (cutter == CutterPolicy::strategy) {
      reply = cutter_move(legal, move->marked)->reply;
    } else if (cutter == CutterPolicy::random) {
      std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
      reply = legal[pick(rng)];
    } else {
      reply = legal.front();
    }
    trace.push_back(make_ply(static_cast<int>(trace.size()), "cutter", to_string(reply.kind), reply.next));
    if (marker == MarkerPolicy::strategy) phase = advance(*move, reply);
    h.push(reply.next);
  }
  return trace;
}

}  // namespace mcgame
