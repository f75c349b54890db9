#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mcgame/arena.hpp"
#include "mcgame/configurations.hpp"
#include "mcgame/strategies.hpp"
#include "support.hpp"

using namespace mcgame;

namespace {

struct Built {
  GameState s;
  std::vector<std::size_t> active;
};

// Realises a template: U as a fresh unique label, N as a unique label or a
// 3-edge nesting path with its companion cycles, named tokens as labels
// shared between their two occurrences. Extra passive cycles are optional.
Built realise(const ConfigTemplate& t, std::mt19937_64& rng, bool deep_n, bool passives, int genus, int g0) {
  std::uint32_t next = 0;
  std::map<Token, std::uint32_t> named;
  std::vector<std::pair<std::vector<std::uint32_t>, bool>> cycles;
  for (const auto& tc : t.cycles) {
    std::vector<std::uint32_t> labels;
    for (Token tok : tc) {
      if (tok == Token::U) {
        labels.push_back(next++);
      } else if (tok == Token::N) {
        if (!deep_n) {
          labels.push_back(next++);
          continue;
        }
        const auto x = next++, y = next++, z = next++, tt = next++, u = next++;
        cycles.push_back({{x, tt, z, tt}, false});
        cycles.push_back({{y, u}, false});
        labels.insert(labels.end(), {x, y, z});
      } else {
        auto [it, fresh] = named.emplace(tok, next);
        if (fresh) ++next;
        labels.push_back(it->second);
      }
    }
    cycles.push_back({labels, true});
  }
  if (passives) {
    const auto p = next++, q = next++;
    cycles.push_back({{p, q}, false});
    cycles.push_back({{q, p}, false});
  }
  for (auto& [labels, active] : cycles) {
    const auto r = std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng);
    std::rotate(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(r), labels.end());
  }
  std::shuffle(cycles.begin(), cycles.end(), rng);
  Built b;
  std::vector<std::vector<std::uint32_t>> raw;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    raw.push_back(cycles[i].first);
    if (cycles[i].second) b.active.push_back(i);
  }
  b.s = GameState::from_ids(raw, genus, g0);
  return b;
}

}  // namespace

TEST(ConfigurationTable, Transcription) {
  const auto& table = configuration_table();
  ASSERT_EQ(table.size(), 12u);
  for (std::size_t i = 0; i < table.size(); ++i) EXPECT_EQ(table[i].id, static_cast<int>(i + 1));
  const std::set<std::string> expected = {"1-A->2",  "1-B->10", "1-C->10", "2-D->3",  "3-A->4",  "4-A->1",
                                          "4-B->5",  "4-C->5",  "5-A->6",  "6-A->7",  "7-A->8",  "8-A->1",
                                          "8-B->9",  "8-C->9",  "9-A->10", "10-A->11", "11-A->12", "12-A->1"};
  EXPECT_EQ(table_transitions(), expected);
  EXPECT_THROW(configuration(0), GameError);
  EXPECT_THROW(configuration(13), GameError);
}

TEST(ConfigurationTable, EveryNamedTokenOccursTwice) {
  for (const auto& t : configuration_table()) {
    std::map<Token, int> count;
    for (const auto& c : t.cycles)
      for (Token tok : c) ++count[tok];
    for (const auto& [tok, n] : count)
      if (is_named(tok)) EXPECT_EQ(n, 2) << "configuration " << t.id;
    EXPECT_LT(t.v.boundary, t.cycles[t.v.cycle].size());
    EXPECT_LT(t.w.boundary, t.cycles[t.w.cycle].size());
  }
}

TEST(Classify, Examples) {
  // One 2-cycle: unique edge plus nesting path.
  const auto one = GameState::from_ids({{0, 1}}, 2, 3);
  auto m = classify_configuration({0}, one);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->id, 1);
  // (c, d) next to (a, b, a, c) with (a, c, a) standing in for an edge.
  const auto seed = GameState::from_ids({{2, 3}, {0, 1, 0, 2}}, 1, 3);
  EXPECT_FALSE(classify_configuration({1}, seed));
  m = classify_configuration({1}, seed, {true});
  ASSERT_TRUE(m);
  EXPECT_EQ(m->id, 1);
  // Two 2-cycles sharing a.
  const auto two = GameState::from_ids({{0, 1}, {0, 2}}, 1, 3);
  m = classify_configuration({0, 1}, two);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->id, 2);
  EXPECT_EQ(m->bindings.at(Token::a), Label{0});
  // Nothing matches a lone 3-cycle of shared labels.
  EXPECT_FALSE(classify_configuration({0}, GameState::from_ids({{0, 1, 2}, {0, 1, 2}}, 0, 0)));
}

TEST(Classify, RealisedTemplatesMatchThemselves) {
  std::mt19937_64 rng(51);
  for (const auto& t : configuration_table())
    for (int k = 0; k < 50; ++k) {
      const auto b = realise(t, rng, k % 2, k % 3 == 0, 2, 4);
      ASSERT_FALSE(validate(b.s)) << to_string(b.s);
      const auto m = match_configuration(t.id, b.active, b.s);
      ASSERT_TRUE(m) << "configuration " << t.id << ": " << to_string(b.s);
    }
}

// Configurations 5 and 9 carry active potential 5; all others less.
TEST(Classify, ActiveSums) {
  std::mt19937_64 rng(52);
  for (const auto& t : configuration_table()) {
    const auto b = realise(t, rng, false, false, 2, 4);
    Potential sum;
    for (auto c : b.active) {
      const auto p = cycle_potential(b.s, c);
      if (p > Potential()) sum += p;
    }
    EXPECT_EQ(active_sum(b.s), sum);
    if (t.id == 5 || t.id == 9)
      EXPECT_EQ(sum, Potential::whole(5)) << "configuration " << t.id;
    else
      EXPECT_LT(sum, Potential::whole(5)) << "configuration " << t.id;
  }
}

// From every configuration, every legal reply to the configured mark lands
// where the table says, keeps passives non-positive and the active sum at
// most 5 (equal only in 5 and 9), and does not lower the potential.
TEST(Closure, ConstructedConfigurations) {
  std::mt19937_64 rng(53);
  std::set<std::string> seen;
  for (const auto& t : configuration_table())
    for (int k = 0; k < 120; ++k)
      for (int genus = 0; genus <= 3; ++genus) {
        const auto b = realise(t, rng, k % 2, k % 3 == 0, genus, 4);
        const PotentialBounding phase{t.id, detail::sorted(b.active), false, false};
        const auto move = marker_move(phase, b.s);
        const auto legal = legal_replies(History(b.s), move.marked);
        if (genus == 0 && !t.next_for(ReplyKind::B) && !t.next_for(ReplyKind::D))
          EXPECT_TRUE(legal.empty()) << "configuration " << t.id << ": " << to_string(b.s);
        for (const auto& r : legal) {
          const auto to = t.next_for(r.kind);
          ASSERT_TRUE(to) << "configuration " << t.id << " reply " << to_string(r.kind) << " " << to_string(b.s);
          MarkerPhase next;
          ASSERT_NO_THROW(next = advance(move, r)) << "configuration " << t.id << " reply " << to_string(r.kind)
                                                   << " from " << to_string(b.s);
          const auto& pb = std::get<PotentialBounding>(next);
          EXPECT_EQ(pb.config, *to);
          seen.insert(transition_name(t.id, r.kind, pb.config));
          for (std::size_t c = 0; c < r.next.cycle_count(); ++c)
            if (!std::binary_search(pb.active.begin(), pb.active.end(), c))
              EXPECT_LE(cycle_potential(r.next, c), Potential()) << to_string(r.next);
          const auto sum = active_sum(r.next);
          EXPECT_LE(sum, Potential::whole(5));
          if (sum == Potential::whole(5)) EXPECT_TRUE(pb.config == 5 || pb.config == 9) << pb.config;
          EXPECT_GE(state_potential(r.next), state_potential(b.s))
              << "configuration " << t.id << " reply " << to_string(r.kind) << " " << to_string(b.s);
        }
      }
  // The mark's orientation fixes which of B and C is the legal one, so
  // coverage is per edge of the table rather than per reply kind.
  auto edges = [](const std::set<std::string>& names) {
    std::set<std::pair<int, int>> out;
    for (const auto& n : names) out.emplace(std::stoi(n), std::stoi(n.substr(n.find('>') + 1)));
    return out;
  };
  EXPECT_EQ(edges(seen), edges(table_transitions()));
  for (const auto& n : seen) EXPECT_TRUE(table_transitions().contains(n)) << n;
}
