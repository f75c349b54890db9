#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcgame {

// Labels are opaque ids. A state's allocator hands out ids above every id
// it has ever issued, so fresh labels never collide.
struct Label {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(Label, Label) = default;
};

inline std::ostream& operator<<(std::ostream& os, Label l) { return os << 'L' << l.id; }

class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A directed cycle of labelled edges. Edge i runs from vertex i to vertex
// i+1 (mod length); vertex i is the tail of edge i.
class BoundaryCycle {
 public:
  BoundaryCycle() = default;
  explicit BoundaryCycle(std::vector<Label> edges) : edges_(std::move(edges)) {
    if (edges_.empty()) throw GameError("boundary cycle must have at least one edge");
  }

  std::size_t length() const { return edges_.size(); }
  const std::vector<Label>& edges() const { return edges_; }
  Label operator[](std::size_t i) const { return edges_[i % edges_.size()]; }
  bool is_loop() const { return edges_.size() == 1; }

  friend bool operator==(const BoundaryCycle&, const BoundaryCycle&) = default;

 private:
  std::vector<Label> edges_;
};

struct EdgeRef {
  std::size_t cycle = 0;
  std::size_t index = 0;

  friend constexpr auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

// Vertex `position` of a cycle is the tail of edge `position`.
struct VertexRef {
  std::size_t cycle = 0;
  std::size_t position = 0;

  friend constexpr auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

enum class LabelStatus { absent, uniquely_appearing, isolated_twice, split_across_cycles };

inline const char* to_string(LabelStatus s) {
  switch (s) {
    case LabelStatus::absent: return "absent";
    case LabelStatus::uniquely_appearing: return "uniquely_appearing";
    case LabelStatus::isolated_twice: return "isolated_twice";
    case LabelStatus::split_across_cycles: return "split_across_cycles";
  }
  return "?";
}

/// A game state: a set of labelled directed cycles, the genus counter and
/// the genus the game started from. Immutable once built.
class GameState {
 public:
  GameState() = default;

  /// Builds a state without checking properness; see validate().
  GameState(std::vector<BoundaryCycle> cycles, int genus, int initial_genus)
      : cycles_(std::move(cycles)), genus_(genus), initial_genus_(initial_genus) {
    std::uint32_t top = 0;
    for (const auto& c : cycles_)
      for (Label l : c.edges()) top = std::max(top, l.id + 1);
    next_label_ = top;
  }

  GameState(std::vector<BoundaryCycle> cycles, int genus, int initial_genus,
            std::uint32_t next_label)
      : GameState(std::move(cycles), genus, initial_genus) {
    next_label_ = std::max(next_label_, next_label);
  }

  static GameState initial(int g0) { return GameState({}, g0, g0); }

  /// Convenience: cycles given as lists of small integers.
  static GameState from_ids(const std::vector<std::vector<std::uint32_t>>& cycles, int genus,
                            int initial_genus) {
    std::vector<BoundaryCycle> cs;
    cs.reserve(cycles.size());
    for (const auto& c : cycles) {
      std::vector<Label> ls;
      for (auto id : c) ls.push_back(Label{id});
      cs.emplace_back(std::move(ls));
    }
    return GameState(std::move(cs), genus, initial_genus);
  }

  const std::vector<BoundaryCycle>& cycles() const { return cycles_; }
  const BoundaryCycle& cycle(std::size_t i) const { return cycles_.at(i); }
  std::size_t cycle_count() const { return cycles_.size(); }
  int genus() const { return genus_; }
  int initial_genus() const { return initial_genus_; }
  std::uint32_t next_label() const { return next_label_; }

  Label label_of(EdgeRef e) const { return cycles_.at(e.cycle)[e.index]; }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (const auto& c : cycles_) n += c.length();
    return n;
  }

  std::vector<EdgeRef> edges_with(Label l) const {
    std::vector<EdgeRef> out;
    for (std::size_t c = 0; c < cycles_.size(); ++c)
      for (std::size_t i = 0; i < cycles_[c].length(); ++i)
        if (cycles_[c][i] == l) out.push_back({c, i});
    return out;
  }

  std::map<Label, int> label_counts() const {
    std::map<Label, int> counts;
    for (const auto& c : cycles_)
      for (Label l : c.edges()) ++counts[l];
    return counts;
  }

  bool is_unique(Label l) const { return edges_with(l).size() == 1; }

  friend bool operator==(const GameState&, const GameState&) = default;

 private:
  std::vector<BoundaryCycle> cycles_;
  int genus_ = 0;
  int initial_genus_ = 0;
  std::uint32_t next_label_ = 0;
};

/// Number of distinct labels in the state.
inline std::size_t value(const GameState& s) { return s.label_counts().size(); }

inline LabelStatus label_status(const GameState& s, Label l) {
  auto occ = s.edges_with(l);
  if (occ.empty()) return LabelStatus::absent;
  if (occ.size() == 1) return LabelStatus::uniquely_appearing;
  return occ[0].cycle == occ[1].cycle ? LabelStatus::isolated_twice
                                      : LabelStatus::split_across_cycles;
}

struct Violation {
  std::string kind;    // "properness", "genus range", "cycle"
  std::string detail;
};

/// First violation of the state invariants, or nullopt for a well-formed state.
inline std::optional<Violation> validate(const GameState& s) {
  for (std::size_t c = 0; c < s.cycle_count(); ++c)
    if (s.cycle(c).length() == 0)
      return Violation{"cycle", "cycle " + std::to_string(c) + " has no edges"};
  for (const auto& [l, n] : s.label_counts()) {
    if (n > 2)
      return Violation{"properness", "label " + std::to_string(l.id) + " appears on " +
                                         std::to_string(n) + " edges"};
    if (l.id >= s.next_label())
      return Violation{"allocator", "label " + std::to_string(l.id) + " not below allocator"};
  }
  if (s.genus() < 0 || s.genus() > s.initial_genus())
    return Violation{"genus range", "genus " + std::to_string(s.genus()) + " outside [0, " +
                                        std::to_string(s.initial_genus()) + "]"};
  return std::nullopt;
}

inline std::string to_string(const GameState& s) {
  std::string out = "g=" + std::to_string(s.genus()) + "/" + std::to_string(s.initial_genus());
  for (const auto& c : s.cycles()) {
    out += " (";
    for (std::size_t i = 0; i < c.length(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i].id);
    }
    out += ')';
  }
  return out;
}

}  // namespace mcgame
