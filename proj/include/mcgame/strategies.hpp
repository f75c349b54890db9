#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mcgame/configurations.hpp"
#include "mcgame/equivalence.hpp"
#include "mcgame/game_state.hpp"
#include "mcgame/moves.hpp"
#include "mcgame/potential.hpp"

namespace mcgame {

/// The strategy cannot continue from the position it was handed.
class StrategyError : public GameError {
 public:
  using GameError::GameError;
};

// ---------------------------------------------------------------- phases

struct Preparatory {
  int non_a_replies = 0;
};

struct RefinedOpening {};

struct PotentialBounding {
  int config = 1;
  std::vector<std::size_t> active;  // cycle indices into the current state
  bool refined = false;             // paths (a, m, a) may stand in for unique edges
  bool rebound = false;

  NestingOptions nesting() const { return {refined}; }
};

struct Terminal {
  std::string reason;
  std::size_t value = 0;
  int genus = 0;
  bool switch_to_cops = false;
};

using MarkerPhase = std::variant<Preparatory, RefinedOpening, PotentialBounding, Terminal>;

inline std::string phase_name(const MarkerPhase& p) {
  if (std::holds_alternative<Preparatory>(p)) return "preparatory";
  if (std::holds_alternative<RefinedOpening>(p)) return "refined-opening";
  if (const auto* b = std::get_if<PotentialBounding>(&p))
    return "configuration " + std::to_string(b->config);
  return "terminal";
}

/// Marker's choice plus the configuration each reply kind should lead to
/// (0 stands for "still preparatory").
struct MarkerMove {
  MarkedState marked;
  std::map<ReplyKind, int> expected;
  MarkerPhase phase;  // the phase the mark was computed in
};

// ---------------------------------------------------------------- helpers

inline std::vector<std::size_t> positive_cycles(const GameState& s) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < s.cycle_count(); ++c)
    if (cycle_potential(s, c) > Potential()) out.push_back(c);
  return out;
}

inline Potential active_sum(const GameState& s) { return positive_part(s); }

namespace detail {

inline std::optional<EdgeRef> first_unique_edge(const GameState& s) {
  for (std::size_t c = 0; c < s.cycle_count(); ++c)
    for (std::size_t i = 0; i < s.cycle(c).length(); ++i)
      if (s.is_unique(s.cycle(c)[i])) return EdgeRef{c, i};
  return std::nullopt;
}

inline MarkedState mark_edge(const GameState& s, EdgeRef e) {
  const auto n = s.cycle(e.cycle).length();
  return MarkedState(s, Endpoint::at(e.cycle, e.index), Endpoint::at(e.cycle, (e.index + 1) % n));
}

// Picks active cycles for the next configuration: all positive cycles plus
// a subset of the other candidates, first match in lexicographic order.
inline std::optional<ConfigMatch> choose_active(int target, const GameState& s,
                                                std::vector<std::size_t> candidates,
                                                NestingOptions opts) {
  const auto positives = positive_cycles(s);
  std::vector<std::size_t> optional_pool;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (auto c : candidates)
    if (!std::binary_search(positives.begin(), positives.end(), c)) optional_pool.push_back(c);

  const std::size_t want = configuration(target).cycles.size();
  if (positives.size() > want) return std::nullopt;
  const std::size_t extra = want - positives.size();
  if (extra > optional_pool.size()) return std::nullopt;

  std::vector<bool> pick(optional_pool.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(extra), true);
  do {
    std::vector<std::size_t> active = positives;
    for (std::size_t i = 0; i < pick.size(); ++i)
      if (pick[i]) active.push_back(optional_pool[i]);
    std::sort(active.begin(), active.end());
    if (auto m = match_configuration(target, active, s, opts)) return m;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

inline std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// A 4-cycle (a, m, a, x) with a isolated and m, x shared, next to a
// 2-cycle (m, d) with d unique: the configuration-2 picture seen through
// the pseudo-edge (a, x, a).
inline std::optional<std::vector<std::size_t>> rebind_cycles(const GameState& s) {
  for (std::size_t c = 0; c < s.cycle_count(); ++c) {
    const auto& cyc = s.cycle(c);
    if (cyc.length() != 4) continue;
    for (std::size_t r = 0; r < 4; ++r) {
      const Label a = cyc[r], m = cyc[r + 1], x = cyc[r + 3];
      if (cyc[r + 2] != a || m == a || x == a || m == x) continue;
      if (s.edges_with(a).size() != 2 || s.is_unique(m) || s.is_unique(x)) continue;
      for (auto e : s.edges_with(m)) {
        if (e.cycle == c) continue;
        const auto& other = s.cycle(e.cycle);
        if (other.length() == 2 && s.is_unique(other[e.index + 1])) return sorted({c, e.cycle});
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline MarkerPhase initial_phase() { return Preparatory{}; }

/// The seed state of the refined game: one cycle (a, b, a, c) at genus g0-1.
inline GameState refined_seed(int g0) {
  if (g0 < 1) throw GameError("the refined game needs g0 >= 1");
  return GameState::from_ids({{0, 1, 0, 2}}, g0 - 1, g0);
}

/// Marker's mark in the given phase.
inline MarkerMove marker_move(const MarkerPhase& phase, const GameState& s) {
  if (const auto* prep = std::get_if<Preparatory>(&phase)) {
    const int finish = prep->non_a_replies + 1 >= 2 ? 1 : 0;
    std::map<ReplyKind, int> expected{{ReplyKind::A, 0}, {ReplyKind::B, finish}, {ReplyKind::C, finish}};
    if (auto e = detail::first_unique_edge(s)) return {detail::mark_edge(s, *e), expected, phase};
    return {MarkedState(s, Endpoint::dummy(), Endpoint::dummy(), true), expected, phase};
  }
  if (std::holds_alternative<RefinedOpening>(phase)) {
    if (s.cycle_count() != 1 || s.cycle(0).length() != 4)
      throw StrategyError("refined game must start from a single 4-cycle");
    const auto& c = s.cycle(0);
    for (std::size_t r = 0; r < 4; ++r)
      if (c[r] == c[r + 2] && s.is_unique(c[r + 1]) && s.is_unique(c[r + 3]))
        return {detail::mark_edge(s, {0, (r + 3) % 4}), {{ReplyKind::A, 1}}, phase};
    throw StrategyError("refined game must start from a cycle (a, b, a, c)");
  }
  if (const auto* pb = std::get_if<PotentialBounding>(&phase)) {
    const auto match = match_configuration(pb->config, pb->active, s, pb->nesting());
    if (!match)
      throw StrategyError("active cycles do not form configuration " + std::to_string(pb->config));
    const auto& t = configuration(pb->config);
    const auto v = match->vertex(t.v), w = match->vertex(t.w);
    std::map<ReplyKind, int> expected(t.transitions.begin(), t.transitions.end());
    return {MarkedState(s, Endpoint::at(v.cycle, v.position), Endpoint::at(w.cycle, w.position)),
            expected, phase};
  }
  throw StrategyError("the game is over in this phase");
}

struct SwitchToCops {
  std::size_t value = 0;
  int genus = 0;
};

/// Marker's move in the refined game. Configuration 2 at genus 1 ends the
/// combinatorial game; at genus 4 the pseudo-edge is moved first.
inline std::variant<MarkerMove, SwitchToCops> refined_marker_move(const MarkerPhase& phase,
                                                                  const GameState& s) {
  if (const auto* pb = std::get_if<PotentialBounding>(&phase); pb && pb->config == 2) {
    if (s.genus() == 1) return SwitchToCops{value(s), s.genus()};
    if (s.genus() == 4 && !pb->rebound) {
      auto cycles = detail::rebind_cycles(s);
      if (!cycles) throw StrategyError("no pseudo-edge to re-bind at genus 4");
      PotentialBounding next = *pb;
      next.active = *cycles;
      next.rebound = true;
      for (auto c : positive_cycles(s))
        if (!std::binary_search(next.active.begin(), next.active.end(), c))
          throw StrategyError("re-binding would leave a positive cycle passive");
      return marker_move(next, s);
    }
  }
  return marker_move(phase, s);
}

/// Phase after Cutter's reply. Throws StrategyError when the reply leaves
/// the configuration table.
inline MarkerPhase advance(const MarkerMove& move, const CutterReply& reply) {
  const GameState& next = reply.next;
  std::vector<std::size_t> fresh;
  for (std::size_t j = 0; j < reply.kept_from.size(); ++j)
    if (!reply.kept_from[j]) fresh.push_back(j);

  auto expected = move.expected.find(reply.kind);
  if (expected == move.expected.end())
    throw StrategyError(std::string("reply ") + to_string(reply.kind) + " not in the transition table for " +
                        phase_name(move.phase));

  if (const auto* prep = std::get_if<Preparatory>(&move.phase)) {
    const int count = prep->non_a_replies + (reply.kind == ReplyKind::A ? 0 : 1);
    if (count < 2) return Preparatory{count};
    auto m = detail::choose_active(1, next, fresh, {});
    if (!m) throw StrategyError("preparatory phase did not end in configuration 1");
    return PotentialBounding{1, detail::sorted(m->cycles), false, false};
  }
  if (std::holds_alternative<RefinedOpening>(move.phase)) {
    auto m = detail::choose_active(1, next, fresh, {true});
    if (!m) throw StrategyError("refined opening did not reach configuration 1");
    return PotentialBounding{1, detail::sorted(m->cycles), true, false};
  }
  const auto& pb = std::get<PotentialBounding>(move.phase);
  std::vector<std::size_t> candidates = fresh;
  for (std::size_t j = 0; j < reply.kept_from.size(); ++j)
    if (reply.kept_from[j] &&
        std::find(pb.active.begin(), pb.active.end(), *reply.kept_from[j]) != pb.active.end())
      candidates.push_back(j);
  auto m = detail::choose_active(expected->second, next, candidates, pb.nesting());
  if (!m)
    throw StrategyError("configuration " + std::to_string(pb.config) + " reply " + to_string(reply.kind) +
                        " did not reach configuration " + std::to_string(expected->second));
  return PotentialBounding{expected->second, detail::sorted(m->cycles), pb.refined, pb.rebound};
}

// ---------------------------------------------------------------- Cutter

/// Reply kind the potential lemmas license for a mark.
inline ReplyKind licensed_kind(const MarkedState& m) {
  if (!m.same_component()) return ReplyKind::D;
  const GameState& s = m.state();
  if (m.v().is_dummy()) return ReplyKind::B;  // both paths trivial
  const auto c = m.v().vertex.cycle;
  const auto split = split_cycle(s.cycle(c), m.v().vertex.position, m.w().vertex.position);
  const Potential limit = Potential::quarters(-2);
  const auto p = segment_potential(Segment{c, split.first, false}, s);
  const auto q = segment_potential(Segment{c, split.second, false}, s);
  if (p >= limit && q >= limit) return ReplyKind::A;
  return q < limit ? ReplyKind::B : ReplyKind::C;
}

struct CutterDecision {
  CutterReply reply;
  ReplyKind suggested = ReplyKind::A;
  bool licensed = true;  // the reply is the one the lemmas suggest
  bool anomaly = false;  // every legal reply raises the potential
};

/// Cutter's potential-guarding reply, or nullopt if no reply is legal.
inline std::optional<CutterDecision> cutter_move(const std::vector<CutterReply>& legal,
                                                 const MarkedState& marked) {
  if (legal.empty()) return std::nullopt;
  const auto suggested = licensed_kind(marked);
  for (const auto& r : legal)
    if (r.kind == suggested) return CutterDecision{r, suggested, true, false};

  const auto now = state_potential(marked.state());
  auto rank = [](const CutterReply& r) {
    switch (r.kind) {
      case ReplyKind::A: return 0;
      case ReplyKind::D: return 1;
      default: return 2;
    }
  };
  auto better = [&](const CutterReply& a, const CutterReply& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    if (value(a.next) != value(b.next)) return value(a.next) > value(b.next);
    return canonical_key(a.next) < canonical_key(b.next);
  };
  const CutterReply* best = nullptr;
  for (const auto& r : legal)
    if (state_potential(r.next) <= now && (!best || better(r, *best))) best = &r;
  if (best) return CutterDecision{*best, suggested, false, false};

  for (const auto& r : legal)
    if (!best || state_potential(r.next) < state_potential(best->next) ||
        (state_potential(r.next) == state_potential(best->next) && better(r, *best)))
      best = &r;
  return CutterDecision{*best, suggested, false, true};
}

inline std::optional<CutterDecision> cutter_move(const History& history, const MarkedState& marked,
                                                 ReductionCache* cache = nullptr) {
  return cutter_move(legal_replies(history, marked, cache), marked);
}

}  // namespace mcgame
