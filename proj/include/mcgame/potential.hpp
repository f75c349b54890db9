#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcgame/game_state.hpp"
#include "mcgame/moves.hpp"

namespace mcgame {

/// Exact potential, stored as a count of quarters.
class Potential {
 public:
  constexpr Potential() = default;
  static constexpr Potential quarters(std::int64_t q) { return Potential(q); }
  static constexpr Potential whole(std::int64_t n) { return Potential(4 * n); }
  static constexpr Potential halves(std::int64_t h) { return Potential(2 * h); }

  constexpr std::int64_t in_quarters() const { return q_; }

  constexpr Potential operator+(Potential o) const { return Potential(q_ + o.q_); }
  constexpr Potential operator-(Potential o) const { return Potential(q_ - o.q_); }
  constexpr Potential operator-() const { return Potential(-q_); }
  constexpr Potential& operator+=(Potential o) {
    q_ += o.q_;
    return *this;
  }
  friend constexpr auto operator<=>(Potential, Potential) = default;

  /// Reduced fraction, e.g. "-3/1", "3/4", "1/2".
  std::string str() const {
    std::int64_t num = q_, den = 4;
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 0) {
      num /= g;
      den /= g;
    }
    return std::to_string(num) + "/" + std::to_string(den);
  }

  static Potential parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) throw GameError("potential must be num/den: " + text);
    const std::int64_t num = std::stoll(text.substr(0, slash));
    const std::int64_t den = std::stoll(text.substr(slash + 1));
    if (den <= 0 || 4 % den != 0) throw GameError("potential denominator must divide 4: " + text);
    return Potential(num * (4 / den));
  }

 private:
  constexpr explicit Potential(std::int64_t q) : q_(q) {}
  std::int64_t q_ = 0;
};

/// A path or a whole cycle inside one cycle of a state. Edge indices are
/// listed in the cycle's orientation; `closed` marks the whole cycle.
struct Segment {
  std::size_t cycle = 0;
  std::vector<std::size_t> edges;
  bool closed = false;

  static Segment whole(const GameState& s, std::size_t cycle) {
    Segment seg{cycle, {}, true};
    for (std::size_t i = 0; i < s.cycle(cycle).length(); ++i) seg.edges.push_back(i);
    return seg;
  }
  static Segment path(const GameState& s, std::size_t cycle, std::size_t start, std::size_t len) {
    Segment seg{cycle, {}, false};
    const auto n = s.cycle(cycle).length();
    for (std::size_t k = 0; k < len; ++k) seg.edges.push_back((start + k) % n);
    return seg;
  }
  static Segment from_refs(const std::vector<EdgeRef>& refs) {
    Segment seg;
    if (!refs.empty()) seg.cycle = refs.front().cycle;
    for (const auto& r : refs) {
      if (r.cycle != seg.cycle) throw GameError("segment edges must share a cycle");
      seg.edges.push_back(r.index);
    }
    return seg;
  }
};

/// p(e, S, γ) for the k-th edge of segment S.
inline Potential edge_potential(std::size_t k, const Segment& seg, const GameState& s) {
  if (k >= seg.edges.size()) throw GameError("edge not on segment");
  const Label l = s.cycle(seg.cycle)[seg.edges[k]];
  if (s.is_unique(l)) return Potential::quarters(6);
  const std::size_t n = seg.edges.size();
  auto same_label_neighbour = [&](std::size_t j) {
    return seg.edges[j] != seg.edges[k] && s.cycle(seg.cycle)[seg.edges[j]] == l;
  };
  bool incident = false;
  if (k > 0) incident |= same_label_neighbour(k - 1);
  if (k + 1 < n) incident |= same_label_neighbour(k + 1);
  if (seg.closed && n > 1) {
    incident |= same_label_neighbour((k + n - 1) % n);
    incident |= same_label_neighbour((k + 1) % n);
  }
  return Potential::quarters(incident ? 3 : 2);
}

/// p(S, γ) = -2 + Σ p(e, S, γ); a trivial segment has potential -2.
inline Potential segment_potential(const Segment& seg, const GameState& s) {
  Potential p = Potential::whole(-2);
  for (std::size_t k = 0; k < seg.edges.size(); ++k) p += edge_potential(k, seg, s);
  return p;
}

inline Potential cycle_potential(const GameState& s, std::size_t cycle) {
  return segment_potential(Segment::whole(s, cycle), s);
}

/// Sum of the positive cycle potentials.
inline Potential positive_part(const GameState& s) {
  Potential sum;
  for (std::size_t c = 0; c < s.cycle_count(); ++c) {
    const auto p = cycle_potential(s, c);
    if (p > Potential()) sum += p;
  }
  return sum;
}

/// p(γ) = 4(g0 - g) - 3 v(γ) + Σ_{p(C) > 0} p(C).
inline Potential state_potential(const GameState& s) {
  return Potential::whole(4 * (s.initial_genus() - s.genus())) -
         Potential::whole(3 * static_cast<std::int64_t>(value(s))) + positive_part(s);
}

struct NestingOptions {
  // Accept a path (a, m, a) with a isolated and m not uniquely appearing as
  // a stand-in for a uniquely labelled edge.
  bool allow_pseudo = false;
};

/// A path of three edges (a, m, a) whose outer label occurs nowhere else.
inline bool is_pseudo_edge(const GameState& s, std::size_t cycle, std::size_t start,
                           std::size_t len) {
  if (len != 3) return false;
  const auto& c = s.cycle(cycle);
  if (c.length() < 3) return false;
  const Label a = c[start], m = c[start + 1], a2 = c[start + 2];
  if (a != a2 || m == a) return false;
  return s.edges_with(a).size() == 2 && !s.is_unique(m);
}

/// Single uniquely labelled edge, or (with allow_pseudo) a pseudo-edge.
inline bool is_unit_edge(const GameState& s, std::size_t cycle, std::size_t start,
                         std::size_t len, NestingOptions opts = {}) {
  if (len == 1) return s.is_unique(s.cycle(cycle)[start]);
  return opts.allow_pseudo && is_pseudo_edge(s, cycle, start, len);
}

namespace detail {

inline bool is_xtzt_cycle(const BoundaryCycle& c, Label x, Label z) {
  if (c.length() != 4) return false;
  for (std::size_t r = 0; r < 4; ++r)
    if (c[r] == x && c[r + 2] == z && c[r + 1] == c[r + 3] && c[r + 1] != x && c[r + 1] != z)
      return true;
  return false;
}

inline bool nesting(const GameState& s, std::size_t cycle, std::size_t start, std::size_t len,
                    NestingOptions opts, std::set<std::pair<std::size_t, Label>>& visited) {
  const auto& c = s.cycle(cycle);
  if (len == 0 || len > c.length()) return false;
  if (len == 1) return s.is_unique(c[start]);
  if (opts.allow_pseudo && is_pseudo_edge(s, cycle, start, len)) return true;
  if (len != 3 || c.length() < 3) return false;

  const Label x = c[start], y = c[start + 1], z = c[start + 2];
  auto elsewhere = [&](Label l) -> std::optional<EdgeRef> {
    auto occ = s.edges_with(l);
    if (occ.size() != 2) return std::nullopt;
    if (occ[0].cycle == occ[1].cycle) return std::nullopt;  // isolated
    return occ[0].cycle == cycle ? occ[1] : occ[0];
  };
  const auto ox = elsewhere(x), oy = elsewhere(y), oz = elsewhere(z);
  if (!ox || !oy || !oz) return false;
  if (ox->cycle != oz->cycle || !is_xtzt_cycle(s.cycle(ox->cycle), x, z)) return false;

  const auto& cy = s.cycle(oy->cycle);
  if (cy.length() < 2) return false;
  if (!visited.insert({oy->cycle, y}).second) return false;
  return nesting(s, oy->cycle, (oy->index + 1) % cy.length(), cy.length() - 1, opts, visited);
}

}  // namespace detail

/// Nesting path: a uniquely labelled edge, or a path (x, y, z) of
/// non-isolated labels where x, z also sit on a cycle (x, t, z, t) and y sits
/// on a cycle made of a y-edge and a nesting path.
inline bool is_nesting_path(const GameState& s, std::size_t cycle, std::size_t start,
                            std::size_t len, NestingOptions opts = {}) {
  std::set<std::pair<std::size_t, Label>> visited;
  return detail::nesting(s, cycle, start % s.cycle(cycle).length(), len, opts, visited);
}

inline bool is_nesting_path(const Segment& seg, const GameState& s, NestingOptions opts = {}) {
  if (seg.closed || seg.edges.empty()) return false;
  const auto n = s.cycle(seg.cycle).length();
  for (std::size_t k = 1; k < seg.edges.size(); ++k)
    if (seg.edges[k] != (seg.edges[k - 1] + 1) % n) return false;
  return is_nesting_path(s, seg.cycle, seg.edges.front(), seg.edges.size(), opts);
}

enum class MarkRelation { gathers, separates, neither };

inline const char* to_string(MarkRelation r) {
  switch (r) {
    case MarkRelation::gathers: return "gathers";
    case MarkRelation::separates: return "separates";
    case MarkRelation::neither: return "neither";
  }
  return "?";
}

/// Side of the v-w split holding every occurrence of l on the cycle:
/// 0 for the v→w segment, 1 for the other, -1 if l sits on both.
inline int side_of(const BoundaryCycle& c, std::size_t v, std::size_t w, Label l) {
  const auto split = split_cycle(c, v, w);
  bool on_first = false, on_second = false;
  for (auto i : split.first) on_first |= c[i] == l;
  for (auto i : split.second) on_second |= c[i] == l;
  if (!on_first && !on_second) throw GameError("label absent from cycle");
  if (on_first && on_second) return -1;
  return on_first ? 0 : 1;
}

/// gathers(a): all a-edges lie on one v-w segment. separates(a, b): a only on
/// one segment and b only on the other.
inline MarkRelation mark_relation(const BoundaryCycle& c, std::size_t v, std::size_t w,
                                  const std::vector<Label>& labels) {
  if (labels.size() == 1)
    return side_of(c, v, w, labels[0]) >= 0 ? MarkRelation::gathers : MarkRelation::neither;
  if (labels.size() == 2) {
    const int a = side_of(c, v, w, labels[0]);
    const int b = side_of(c, v, w, labels[1]);
    return a >= 0 && b >= 0 && a != b ? MarkRelation::separates : MarkRelation::neither;
  }
  throw GameError("mark_relation takes one or two labels");
}

}  // namespace mcgame
