#include <gtest/gtest.h>

#include <map>
#include <random>

#include "mcgame/game_state.hpp"
#include "mcgame/moves.hpp"
#include "support.hpp"

using namespace mcgame;
using testing_support::random_state;

namespace {

constexpr std::uint32_t a = 0, b = 1, c = 2, x = 3, y = 4;

std::vector<std::uint32_t> ids(const BoundaryCycle& cyc) {
  std::vector<std::uint32_t> out;
  for (Label l : cyc.edges()) out.push_back(l.id);
  return out;
}

}  // namespace

TEST(Value, Examples) {
  EXPECT_EQ(value(GameState::initial(3)), 0u);
  EXPECT_EQ(value(GameState::from_ids({{a, b, a, c}}, 1, 2)), 3u);
  EXPECT_EQ(value(GameState::from_ids({{7}, {7}}, 0, 0)), 1u);
}

TEST(LabelStatus, Examples) {
  const auto s = GameState::from_ids({{a, b, a, c}}, 0, 0);
  EXPECT_EQ(label_status(s, Label{b}), LabelStatus::uniquely_appearing);
  EXPECT_EQ(label_status(s, Label{a}), LabelStatus::isolated_twice);
  EXPECT_EQ(label_status(s, Label{9}), LabelStatus::absent);
  const auto t = GameState::from_ids({{a, x}, {a, y}}, 0, 0);
  EXPECT_EQ(label_status(t, Label{a}), LabelStatus::split_across_cycles);
}

TEST(MarkerMoves, Examples) {
  EXPECT_EQ(enumerate_marker_moves(GameState::from_ids({{x, y}}, 0, 0)).size(), 7u);
  EXPECT_EQ(enumerate_marker_moves(GameState::initial(0)).size(), 2u);
  EXPECT_EQ(enumerate_marker_moves(GameState::from_ids({{x}}, 0, 0)).size(), 4u);
}

TEST(MarkerMoves, CountMatchesMultisetFormula) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const auto s = random_state(rng, 3, 4);
    const std::size_t n = s.edge_count();  // one vertex per edge on a cycle
    const auto moves = enumerate_marker_moves(s);
    ASSERT_EQ(moves.size(), n * (n + 1) / 2 + n + 2);
    std::set<std::string> seen;
    for (const auto& m : moves) {
      std::string k = mark_string(m);
      std::string r = to_string(m.w(), m.v().is_dummy() && m.w().is_dummy() && !m.same_dummy()) + "|" +
                      to_string(m.v());
      ASSERT_TRUE(seen.insert(k).second) << k;
      if (!m.v().is_dummy() && !m.w().is_dummy() && !(m.v() == m.w())) ASSERT_FALSE(seen.contains(r));
    }
  }
}

TEST(SplitCycle, Examples) {
  const auto s = GameState::from_ids({{a, b, a, c}}, 0, 0);
  // The c-edge runs from vertex 3 to vertex 0.
  auto p = split_cycle(s.cycle(0), 3, 0);
  EXPECT_EQ(p.first, (std::vector<std::size_t>{3}));
  EXPECT_EQ(p.second, (std::vector<std::size_t>{0, 1, 2}));

  const auto t = GameState::from_ids({{x, y}}, 0, 0);
  p = split_cycle(t.cycle(0), 0, 1);
  EXPECT_EQ(p.first, (std::vector<std::size_t>{0}));
  EXPECT_EQ(p.second, (std::vector<std::size_t>{1}));

  const auto loop = GameState::from_ids({{x}}, 0, 0);
  p = split_cycle(loop.cycle(0), 0, 0);
  EXPECT_EQ(p.first, (std::vector<std::size_t>{0}));
  EXPECT_TRUE(p.second.empty());

  EXPECT_THROW(split_cycle(t.cycle(0), 0, 5), GameError);
}

TEST(CutterReplies, SameDummyOnEmptyState) {
  const MarkedState m(GameState::initial(2), Endpoint::dummy(), Endpoint::dummy(), true);
  const auto replies = cutter_replies(m);
  ASSERT_EQ(replies.size(), 3u);
  std::map<ReplyKind, const CutterReply*> by;
  for (const auto& r : replies) by[r.kind] = &r;
  const auto l = by[ReplyKind::A]->new_label.id;
  EXPECT_EQ(by[ReplyKind::A]->next, GameState::from_ids({{l}, {l}}, 1, 2));
  EXPECT_EQ(by[ReplyKind::B]->next, GameState::from_ids({{l}}, 2, 2));
  EXPECT_EQ(by[ReplyKind::C]->next, GameState::from_ids({{l}}, 2, 2));
}

TEST(CutterReplies, DistinctDummies) {
  const MarkedState m(GameState::initial(2), Endpoint::dummy(), Endpoint::dummy(), false);
  const auto replies = cutter_replies(m);
  ASSERT_EQ(replies.size(), 1u);
  EXPECT_EQ(replies[0].kind, ReplyKind::D);
  const auto l = replies[0].new_label.id;
  EXPECT_EQ(replies[0].next, GameState::from_ids({{l, l}}, 2, 2));
}

TEST(CutterReplies, EdgeMarkOnFourCycle) {
  const auto s = GameState::from_ids({{a, b, a, c}}, 2, 3);
  const MarkedState m(s, Endpoint::at(0, 3), Endpoint::at(0, 0));
  for (const auto& r : cutter_replies(m)) {
    if (r.kind != ReplyKind::A) continue;
    const auto l = r.new_label.id;
    EXPECT_EQ(r.next.genus(), 1);
    EXPECT_EQ(ids(r.next.cycle(*r.first)), (std::vector<std::uint32_t>{c, l}));
    EXPECT_EQ(ids(r.next.cycle(*r.second)), (std::vector<std::uint32_t>{a, b, a, l}));
    return;
  }
  FAIL() << "no kind A reply";
}

TEST(CutterReplies, VertexEqualsVertexOpensWholeCycle) {
  const auto s = GameState::from_ids({{x, y}}, 1, 1);
  const MarkedState m(s, Endpoint::at(0, 1), Endpoint::at(0, 1));
  for (const auto& r : cutter_replies(m)) {
    const auto l = r.new_label.id;
    if (r.kind == ReplyKind::A) {
      EXPECT_EQ(ids(r.next.cycle(*r.first)), (std::vector<std::uint32_t>{y, x, l}));
      EXPECT_EQ(ids(r.next.cycle(*r.second)), (std::vector<std::uint32_t>{l}));
    }
  }
}

TEST(CutterReplies, RejectsDanglingMark) {
  const auto s = GameState::from_ids({{x, y}}, 0, 0);
  EXPECT_THROW(MarkedState(s, Endpoint::at(0, 2), Endpoint::dummy()), GameError);
  EXPECT_THROW(MarkedState(s, Endpoint::at(1, 0), Endpoint::dummy()), GameError);
  EXPECT_THROW(MarkedState(s, Endpoint::at(0, 0), Endpoint::dummy(), true), GameError);
}

TEST(Validate, Examples) {
  EXPECT_FALSE(validate(GameState::from_ids({{a, b, a, c}}, 0, 1)));
  auto v = validate(GameState::from_ids({{a, a}, {a}}, 0, 0));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, "properness");
  v = validate(GameState::from_ids({{a}}, 3, 2));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, "genus range");
}

// Bookkeeping invariants over random replies.
TEST(CutterReplies, BookkeepingProperties) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto s = random_state(rng, 3, 5);
    const auto m = testing_support::random_mark(s, rng);
    const bool same = m.same_component();
    for (const auto& r : cutter_replies(m)) {
      ++checked;
      ASSERT_FALSE(validate(r.next)) << to_string(r.next);
      ASSERT_EQ(r.kind == ReplyKind::D, !same);
      if (s.genus() == 0) ASSERT_NE(r.kind, ReplyKind::A);
      ASSERT_EQ(r.next.genus(), s.genus() - (r.kind == ReplyKind::A ? 1 : 0));
      ASSERT_GE(r.new_label.id, s.next_label());

      // New label sits exactly on f (and f').
      const int fresh = static_cast<int>(r.next.edges_with(r.new_label).size());
      ASSERT_EQ(fresh, r.kind == ReplyKind::B || r.kind == ReplyKind::C ? 1 : 2);

      // Non-new labels: untouched cycles plus the kept paths.
      std::map<std::uint32_t, int> expect, got;
      std::vector<std::size_t> touched;
      if (!m.v().is_dummy()) touched.push_back(m.v().vertex.cycle);
      if (!m.w().is_dummy()) touched.push_back(m.w().vertex.cycle);
      for (std::size_t cy = 0; cy < s.cycle_count(); ++cy)
        if (std::find(touched.begin(), touched.end(), cy) == touched.end())
          for (Label l : s.cycle(cy).edges()) ++expect[l.id];
      auto add = [&](const std::vector<EdgeRef>& p) {
        for (auto e : p) ++expect[s.label_of(e).id];
      };
      if (r.kind != ReplyKind::C) add(r.path);
      if (r.kind != ReplyKind::B) add(r.path_prime);
      for (const auto& cyc : r.next.cycles())
        for (Label l : cyc.edges())
          if (l != r.new_label) ++got[l.id];
      ASSERT_EQ(expect, got);

      const std::size_t p = r.path.size(), q = r.path_prime.size();
      if (r.kind == ReplyKind::A)
        ASSERT_EQ(r.next.cycle(*r.first).length() + r.next.cycle(*r.second).length(), p + q + 2);
      if (r.kind == ReplyKind::D) ASSERT_EQ(r.next.cycle(*r.first).length(), p + q + 2);
      if (same && !m.v().is_dummy()) ASSERT_EQ(p + q, s.cycle(m.v().vertex.cycle).length());
    }
  }
  EXPECT_GE(checked, 10000);
}
