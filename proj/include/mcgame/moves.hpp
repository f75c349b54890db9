#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcgame/game_state.hpp"

namespace mcgame {

/// One of Marker's two choices: a vertex of the state or a dummy vertex.
struct Endpoint {
  enum class Kind { vertex, dummy };
  Kind kind = Kind::dummy;
  VertexRef vertex{};

  static Endpoint at(std::size_t cycle, std::size_t position) {
    return {Kind::vertex, {cycle, position}};
  }
  static Endpoint dummy() { return {}; }

  bool is_dummy() const { return kind == Kind::dummy; }
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// A state plus Marker's pair {v, w}. Two dummies are distinct unless
/// same_dummy is set.
class MarkedState {
 public:
  MarkedState(GameState state, Endpoint v, Endpoint w, bool same_dummy = false)
      : state_(std::move(state)), v_(v), w_(w), same_dummy_(same_dummy) {
    if (same_dummy_ && !(v_.is_dummy() && w_.is_dummy()))
      throw GameError("same_dummy requires both choices to be dummies");
    check(v_);
    check(w_);
  }

  const GameState& state() const { return state_; }
  const Endpoint& v() const { return v_; }
  const Endpoint& w() const { return w_; }
  bool same_dummy() const { return same_dummy_; }

  /// True when v and w lie in one component (one cycle, or the same dummy).
  bool same_component() const {
    if (v_.is_dummy() && w_.is_dummy()) return same_dummy_;
    if (v_.is_dummy() || w_.is_dummy()) return false;
    return v_.vertex.cycle == w_.vertex.cycle;
  }

 private:
  void check(const Endpoint& e) const {
    if (e.is_dummy()) return;
    if (e.vertex.cycle >= state_.cycle_count() ||
        e.vertex.position >= state_.cycle(e.vertex.cycle).length())
      throw GameError("marked vertex does not exist in the state");
  }

  GameState state_;
  Endpoint v_, w_;
  bool same_dummy_ = false;
};

inline std::string to_string(const Endpoint& e, bool second_dummy = false) {
  if (e.is_dummy()) return second_dummy ? "d2" : "d1";
  return "c" + std::to_string(e.vertex.cycle) + "." + std::to_string(e.vertex.position);
}

inline std::string mark_string(const MarkedState& m) {
  bool distinct_dummies = m.v().is_dummy() && m.w().is_dummy() && !m.same_dummy();
  return to_string(m.v()) + "|" + to_string(m.w(), distinct_dummies);
}

/// All unordered choices {v, w} over the vertices plus up to two dummies.
inline std::vector<MarkedState> enumerate_marker_moves(const GameState& s) {
  std::vector<Endpoint> vertices;
  for (std::size_t c = 0; c < s.cycle_count(); ++c)
    for (std::size_t p = 0; p < s.cycle(c).length(); ++p) vertices.push_back(Endpoint::at(c, p));

  std::vector<MarkedState> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i; j < vertices.size(); ++j) out.emplace_back(s, vertices[i], vertices[j]);
  for (const auto& v : vertices) out.emplace_back(s, v, Endpoint::dummy());
  out.emplace_back(s, Endpoint::dummy(), Endpoint::dummy(), true);
  out.emplace_back(s, Endpoint::dummy(), Endpoint::dummy(), false);
  return out;
}

/// Edge indices of the two directed paths obtained by splitting v and w on a
/// cycle: `first` runs from v to w, `second` from w back to v. For v == w the
/// whole cycle opened at v is `first` and `second` is trivial.
struct SplitPaths {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

inline SplitPaths split_cycle(const BoundaryCycle& c, std::size_t v, std::size_t w) {
  const std::size_t n = c.length();
  if (v >= n || w >= n) throw GameError("vertex not on cycle");
  SplitPaths out;
  if (v == w) {
    for (std::size_t k = 0; k < n; ++k) out.first.push_back((v + k) % n);
    return out;
  }
  for (std::size_t i = v; i != w; i = (i + 1) % n) out.first.push_back(i);
  for (std::size_t i = w; i != v; i = (i + 1) % n) out.second.push_back(i);
  return out;
}

enum class ReplyKind { A, B, C, D };

inline const char* to_string(ReplyKind k) {
  switch (k) {
    case ReplyKind::A: return "A";
    case ReplyKind::B: return "B";
    case ReplyKind::C: return "C";
    case ReplyKind::D: return "D";
  }
  return "?";
}

/// One Cutter reply together with where its pieces came from.
struct CutterReply {
  ReplyKind kind = ReplyKind::A;
  Label new_label{};
  GameState next;
  // Paths P and P' as edges of the marked state (empty when trivial).
  std::vector<EdgeRef> path;
  std::vector<EdgeRef> path_prime;
  // Indices into next.cycles(): Ĉ1 / Ĉ2 for kinds A-C, Ĉ in `first` for D.
  std::optional<std::size_t> first;
  std::optional<std::size_t> second;
  // For every cycle of `next`, the index of the cycle it was copied from.
  std::vector<std::optional<std::size_t>> kept_from;
};

struct CutterRules {
  // Unrestricted Cutter may keep any union of the untouched components and
  // lower the genus counter arbitrarily on moves B and C.
  bool unrestricted = false;
};

namespace detail {

inline std::vector<Label> labels_along(const GameState& s, const std::vector<EdgeRef>& path) {
  std::vector<Label> out;
  for (const auto& e : path) out.push_back(s.label_of(e));
  return out;
}

inline std::vector<EdgeRef> refs(std::size_t cycle, const std::vector<std::size_t>& idx) {
  std::vector<EdgeRef> out;
  for (auto i : idx) out.push_back({cycle, i});
  return out;
}

// Whole cycle opened at a vertex (the path from v1 to v2).
inline std::vector<EdgeRef> opened_at(const GameState& s, const Endpoint& e) {
  if (e.is_dummy()) return {};
  const auto n = s.cycle(e.vertex.cycle).length();
  std::vector<EdgeRef> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back({e.vertex.cycle, (e.vertex.position + k) % n});
  return out;
}

}  // namespace detail

/// Every reply available to Cutter for a marked state. Restricted rules keep
/// all untouched cycles and the genus on moves B/C; legality against the
/// play history is applied separately (see legal_replies).
inline std::vector<CutterReply> cutter_replies(const MarkedState& m, CutterRules rules = {}) {
  const GameState& s = m.state();
  const Label fresh{s.next_label()};

  std::vector<std::size_t> touched;
  if (!m.v().is_dummy()) touched.push_back(m.v().vertex.cycle);
  if (!m.w().is_dummy() && (touched.empty() || touched[0] != m.w().vertex.cycle))
    touched.push_back(m.w().vertex.cycle);

  std::vector<std::size_t> untouched;
  for (std::size_t c = 0; c < s.cycle_count(); ++c)
    if (std::find(touched.begin(), touched.end(), c) == touched.end()) untouched.push_back(c);

  // Subsets of the untouched components Cutter may keep.
  std::vector<std::vector<std::size_t>> keeps;
  if (rules.unrestricted) {
    if (untouched.size() > 16) throw GameError("too many components for unrestricted enumeration");
    for (std::size_t mask = 0; mask < (std::size_t{1} << untouched.size()); ++mask) {
      std::vector<std::size_t> k;
      for (std::size_t i = 0; i < untouched.size(); ++i)
        if (mask >> i & 1) k.push_back(untouched[i]);
      keeps.push_back(std::move(k));
    }
    // Full keep first so that the restricted reply leads the list.
    std::reverse(keeps.begin(), keeps.end());
  } else {
    keeps.push_back(untouched);
  }

  auto with_new = [&](const std::vector<std::size_t>& keep,
                      const std::vector<std::vector<Label>>& fresh_cycles, int genus,
                      CutterReply base) {
    std::vector<BoundaryCycle> cs;
    for (auto c : keep) {
      cs.push_back(s.cycle(c));
      base.kept_from.push_back(c);
    }
    for (std::size_t i = 0; i < fresh_cycles.size(); ++i) {
      cs.emplace_back(fresh_cycles[i]);
      base.kept_from.push_back(std::nullopt);
    }
    base.new_label = fresh;
    base.next = GameState(std::move(cs), genus, s.initial_genus(), fresh.id + 1);
    return base;
  };

  std::vector<CutterReply> out;
  if (m.same_component()) {
    CutterReply base;
    if (!m.v().is_dummy()) {
      const auto c = m.v().vertex.cycle;
      auto split = split_cycle(s.cycle(c), m.v().vertex.position, m.w().vertex.position);
      base.path = detail::refs(c, split.first);
      base.path_prime = detail::refs(c, split.second);
    }
    auto c1 = detail::labels_along(s, base.path);
    c1.push_back(fresh);
    auto c2 = detail::labels_along(s, base.path_prime);
    c2.push_back(fresh);

    for (const auto& keep : keeps) {
      const std::size_t at = keep.size();
      if (s.genus() >= 1) {
        CutterReply r = base;
        r.kind = ReplyKind::A;
        r.first = at;
        r.second = at + 1;
        out.push_back(with_new(keep, {c1, c2}, s.genus() - 1, std::move(r)));
      }
      const int lowest = rules.unrestricted ? 0 : s.genus();
      for (int g = s.genus(); g >= lowest; --g) {
        CutterReply rb = base;
        rb.kind = ReplyKind::B;
        rb.first = at;
        out.push_back(with_new(keep, {c1}, g, std::move(rb)));
        CutterReply rc = base;
        rc.kind = ReplyKind::C;
        rc.second = at;
        out.push_back(with_new(keep, {c2}, g, std::move(rc)));
      }
    }
    return out;
  }

  // Different components: amalgamate into f, P, f', P'.
  CutterReply base;
  base.kind = ReplyKind::D;
  base.path = detail::opened_at(s, m.v());
  base.path_prime = detail::opened_at(s, m.w());
  std::vector<Label> hat{fresh};
  for (Label l : detail::labels_along(s, base.path)) hat.push_back(l);
  hat.push_back(fresh);
  for (Label l : detail::labels_along(s, base.path_prime)) hat.push_back(l);
  // Move D never discards components, even for unrestricted Cutter.
  CutterReply r = base;
  r.first = untouched.size();
  out.push_back(with_new(untouched, {hat}, s.genus(), std::move(r)));
  return out;
}

}  // namespace mcgame
