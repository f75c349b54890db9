#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcgame/game_state.hpp"
#include "mcgame/moves.hpp"
#include "mcgame/potential.hpp"

namespace mcgame {

// Configurations of active cycles in Marker's potential-bounding strategy.
//
// Tokens: U is an edge with a uniquely appearing label, N a nesting path,
// and a..e stand for labels that are not uniquely appearing. Each named
// label occurs exactly twice in a configuration. Cycles list their tokens
// in orientation order. Marker picks the tails of two tokens.

enum class Token : char { U = 'U', N = 'N', a = 'a', b = 'b', c = 'c', d = 'd', e = 'e' };

inline bool is_named(Token t) { return t != Token::U && t != Token::N; }

struct MarkSpot {
  std::size_t cycle;     // template cycle
  std::size_t boundary;  // tail of this token
};

struct ConfigTemplate {
  int id;
  std::vector<std::vector<Token>> cycles;
  MarkSpot v, w;
  std::vector<std::pair<ReplyKind, int>> transitions;

  std::optional<int> next_for(ReplyKind k) const {
    for (const auto& [kind, to] : transitions)
      if (kind == k) return to;
    return std::nullopt;
  }
};

inline const std::vector<ConfigTemplate>& configuration_table() {
  using T = Token;
  using K = ReplyKind;
  static const std::vector<ConfigTemplate> table = {
      {1, {{T::U, T::N}}, {0, 0}, {0, 1}, {{K::A, 2}, {K::B, 10}, {K::C, 10}}},
      {2, {{T::a, T::N}, {T::a, T::U}}, {0, 1}, {1, 0}, {{K::D, 3}}},
      {3, {{T::N, T::a, T::b, T::a, T::U, T::b}}, {0, 1}, {0, 4}, {{K::A, 4}}},
      {4,
       {{T::a, T::b, T::a, T::c}, {T::N, T::c, T::U, T::b}},
       {1, 0},
       {1, 1},
       {{K::A, 1}, {K::B, 5}, {K::C, 5}}},
      {5,
       {{T::U, T::N}, {T::d, T::U, T::d, T::U}, {T::a, T::b, T::a, T::c}, {T::U, T::c, T::U, T::b}},
       {1, 1},
       {1, 2},
       {{K::A, 6}}},
      {6,
       {{T::U, T::N},
        {T::e, T::U},
        {T::d, T::U, T::d, T::e},
        {T::a, T::b, T::a, T::c},
        {T::U, T::c, T::U, T::b}},
       {2, 1},
       {2, 2},
       {{K::A, 7}}},
      {7,
       {{T::U, T::N}, {T::a, T::b, T::a, T::c}, {T::U, T::c, T::U, T::b}},
       {2, 0},
       {2, 1},
       {{K::A, 8}}},
      {8,
       {{T::d, T::U}, {T::U, T::N}, {T::a, T::b, T::a, T::c}, {T::d, T::c, T::U, T::b}},
       {3, 2},
       {3, 3},
       {{K::A, 1}, {K::B, 9}, {K::C, 9}}},
      {9,
       {{T::U, T::U}, {T::U, T::U}, {T::U, T::N}, {T::a, T::U, T::a, T::U}},
       {0, 0},
       {0, 1},
       {{K::A, 10}}},
      {10, {{T::U, T::U}, {T::U, T::N}, {T::a, T::U, T::a, T::U}}, {2, 1}, {2, 2}, {{K::A, 11}}},
      {11,
       {{T::U, T::U}, {T::U, T::N}, {T::b, T::U}, {T::a, T::b, T::a, T::U}},
       {3, 3},
       {3, 0},
       {{K::A, 12}}},
      {12, {{T::U, T::U}, {T::U, T::N}}, {0, 0}, {0, 1}, {{K::A, 1}}},
  };
  return table;
}

inline const ConfigTemplate& configuration(int id) {
  const auto& t = configuration_table();
  if (id < 1 || id > static_cast<int>(t.size())) throw GameError("no such configuration");
  return t[static_cast<std::size_t>(id - 1)];
}

/// How a template was laid onto concrete cycles.
struct ConfigMatch {
  int id = 0;
  std::vector<std::size_t> cycles;  // state cycle for each template cycle
  // Start edge of every token, per template cycle, as a position on the
  // state cycle.
  std::vector<std::vector<std::size_t>> token_start;
  std::map<Token, Label> bindings;

  VertexRef vertex(MarkSpot spot) const {
    return {cycles[spot.cycle], token_start[spot.cycle][spot.boundary]};
  }
};

namespace detail {

class TemplateMatcher {
 public:
  TemplateMatcher(const ConfigTemplate& t, const std::vector<std::size_t>& active,
                  const GameState& s, NestingOptions opts)
      : t_(t), active_(active), s_(s), opts_(opts) {}

  std::optional<ConfigMatch> run() {
    if (active_.size() != t_.cycles.size()) return std::nullopt;
    match_.id = t_.id;
    match_.cycles.assign(t_.cycles.size(), 0);
    match_.token_start.assign(t_.cycles.size(), {});
    used_.assign(active_.size(), false);
    if (cycle_step(0)) return match_;
    return std::nullopt;
  }

 private:
  bool cycle_step(std::size_t tc) {
    if (tc == t_.cycles.size()) return true;
    for (std::size_t i = 0; i < active_.size(); ++i) {
      if (used_[i]) continue;
      const std::size_t sc = active_[i];
      const std::size_t n = s_.cycle(sc).length();
      if (n < t_.cycles[tc].size()) continue;
      used_[i] = true;
      match_.cycles[tc] = sc;
      for (std::size_t rot = 0; rot < n; ++rot) {
        match_.token_start[tc].clear();
        if (token_step(tc, sc, rot, 0, 0)) return true;
      }
      used_[i] = false;
    }
    return false;
  }

  bool token_step(std::size_t tc, std::size_t sc, std::size_t rot, std::size_t tok,
                  std::size_t used) {
    const auto& tokens = t_.cycles[tc];
    const std::size_t n = s_.cycle(sc).length();
    if (tok == tokens.size()) return used == n && cycle_step(tc + 1);
    const std::size_t pos = (rot + used) % n;
    const Token t = tokens[tok];
    for (std::size_t len : {std::size_t{1}, std::size_t{3}}) {
      if (used + len > n) continue;
      if (!fits(t, sc, pos, len)) continue;
      std::optional<std::pair<Token, Label>> fresh_binding;
      if (is_named(t)) {
        const Label l = s_.cycle(sc)[pos];
        auto it = match_.bindings.find(t);
        if (it == match_.bindings.end()) {
          for (const auto& [other, bound] : match_.bindings)
            if (bound == l) goto next_len;
          fresh_binding = {t, l};
          match_.bindings.emplace(t, l);
        } else if (it->second != l) {
          continue;
        }
      }
      match_.token_start[tc].push_back(pos);
      if (token_step(tc, sc, rot, tok + 1, used + len)) return true;
      match_.token_start[tc].pop_back();
      if (fresh_binding) match_.bindings.erase(fresh_binding->first);
    next_len:;
    }
    return false;
  }

  bool fits(Token t, std::size_t sc, std::size_t pos, std::size_t len) const {
    switch (t) {
      case Token::U: return is_unit_edge(s_, sc, pos, len, opts_);
      case Token::N: return is_nesting_path(s_, sc, pos, len, opts_);
      default: return len == 1 && !s_.is_unique(s_.cycle(sc)[pos]);
    }
  }

  const ConfigTemplate& t_;
  const std::vector<std::size_t>& active_;
  const GameState& s_;
  NestingOptions opts_;
  ConfigMatch match_;
  std::vector<bool> used_;
};

}  // namespace detail

inline std::optional<ConfigMatch> match_configuration(int id, const std::vector<std::size_t>& active,
                                                      const GameState& s, NestingOptions opts = {}) {
  return detail::TemplateMatcher(configuration(id), active, s, opts).run();
}

/// Identifies which configuration the active cycles form, if any.
inline std::optional<ConfigMatch> classify_configuration(const std::vector<std::size_t>& active,
                                                         const GameState& s,
                                                         NestingOptions opts = {}) {
  for (const auto& t : configuration_table())
    if (auto m = detail::TemplateMatcher(t, active, s, opts).run()) return m;
  return std::nullopt;
}

}  // namespace mcgame
