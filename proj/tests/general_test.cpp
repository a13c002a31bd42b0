#include <gtest/gtest.h>

#include <random>

#include "gridgather/general.hpp"

namespace gg = gridgather;
using gg::Cell;
using gg::Characteristic;
using gg::Configuration;
using gg::GGPhase;
using gg::GGState;
using gg::Move;
using gg::Outcome;
using gg::Slot;

namespace {

Characteristic ch(std::string_view letters) {
  std::vector<Move> moves;
  for (char c : letters) moves.push_back(gg::move_of(*gg::dir_from_letter(c)));
  return Characteristic::from_moves(moves);
}

gg::RunResult<gg::GeneralMachine> run_audited(gg::ApproachKind kind, const Configuration& cfg, std::uint64_t n,
                                              const gg::SchedulerStrategy& s, std::uint64_t seed,
                                              gg::Round budget = 200000) {
  gg::RunOptions<gg::GeneralMachine> opt;
  opt.record_trace = false;
  opt.auditors = gg::general_auditors();
  return gg::run(gg::GeneralMachine(kind), cfg, gg::encode_count(n), s, seed, budget, opt);
}

Configuration random_scene(std::mt19937_64& rng, int agents, int spread) {
  std::uniform_int_distribution<int> u(-spread, spread);
  Configuration cfg;
  std::vector<Cell> used;
  while (static_cast<int>(used.size()) < agents) {
    Cell c{u(rng), u(rng)};
    if (std::find(used.begin(), used.end(), c) != used.end()) continue;
    used.push_back(c);
    cfg.add(c);
  }
  return cfg;
}

}  // namespace

TEST(Characteristic, OrderAndSharing) {
  EXPECT_LT(ch("N"), ch("E"));
  EXPECT_LT(ch("E"), ch("S"));
  EXPECT_LT(ch("S"), ch("W"));
  EXPECT_LT(ch("N"), ch("NN"));
  EXPECT_LT(ch(""), ch("W"));
  EXPECT_LT(ch("NE"), ch("NS"));

  Characteristic a = ch("NE");
  Characteristic b = a.extended(Move::S);
  Characteristic c = a.extended(Move::W);
  EXPECT_EQ(a.to_text(), "NE");
  EXPECT_EQ(b.to_text(), "NES");
  EXPECT_EQ(c.to_text(), "NEW");
  EXPECT_EQ(b.displacement(), (Cell{1, 0}));
  EXPECT_EQ(a.extended(Move::P), a);
}

TEST(Contest, LargerCharacteristicWins) {
  auto r = gg::contest(ch("NE"), {{Slot::W, ch("NS")}});
  EXPECT_TRUE(r.lose);
  EXPECT_FALSE(gg::contest(ch("NS"), {{Slot::E, ch("NE")}}).lose);
  EXPECT_FALSE(gg::contest(ch("N"), {}).lose);
}

TEST(Contest, TieGoesAgainstSouthAndWest) {
  EXPECT_TRUE(gg::contest(ch("E"), {{Slot::N, ch("E")}}).lose);
  EXPECT_TRUE(gg::contest(ch("E"), {{Slot::E, ch("E")}}).lose);
  EXPECT_FALSE(gg::contest(ch("E"), {{Slot::S, ch("E")}}).lose);
  EXPECT_FALSE(gg::contest(ch("E"), {{Slot::W, ch("E")}}).lose);
  EXPECT_THROW(gg::contest(ch("E"), {{Slot::P, ch("E")}}), gg::Error);
}

TEST(Contest, CaptorIsTheLargestRival) {
  auto r = gg::contest(ch("N"), {{Slot::N, ch("E")}, {Slot::W, ch("W")}, {Slot::S, ch("")}});
  ASSERT_TRUE(r.lose);
  EXPECT_EQ(r.captor, 1u);
}

TEST(Bag, AbsorbRebasesLoserPaths) {
  auto bag = gg::absorb({}, {{Cell{0, 1}, {Cell{0, 1}}}});
  ASSERT_EQ(bag.size(), 2u);
  EXPECT_EQ(gg::path_text(bag[0]), "N");
  EXPECT_EQ(gg::path_text(bag[1]), "NN");
}

TEST(Guiding, LexicographicVisitOrder) {
  auto plan = gg::guiding_plan({Cell{1, 0}, Cell{0, 1}});
  ASSERT_EQ(plan.size(), 2u);
  EXPECT_EQ(gg::path_text(plan[0]), "N");
  EXPECT_EQ(gg::path_text(plan[1]), "E");

  plan = gg::guiding_plan({Cell{1, 1}, Cell{0, 1}, Cell{0, 1}});
  ASSERT_EQ(plan.size(), 2u);
  EXPECT_EQ(plan[0], (Cell{0, 1}));
  EXPECT_EQ(plan[1], (Cell{1, 1}));
}

TEST(Guiding, DeliverHandsOverReturnPath) {
  GGState champion;
  champion.phase = GGPhase::Guiding;
  champion.champion = true;
  champion.ch = ch("NE");
  GGState waiting;
  waiting.phase = GGPhase::Waiting;
  waiting.settled = true;

  auto [c, w] = gg::deliver(champion, waiting);
  EXPECT_EQ(c, champion);
  EXPECT_EQ(w.phase, GGPhase::FinalWalk);
  EXPECT_EQ(w.route, (std::vector<Move>{Move::W, Move::S}));

  auto [c2, again] = gg::deliver(champion, w);
  EXPECT_EQ(again, w);
}

TEST(Guiding, ReturnPathUndoesLongCharacteristic) {
  auto c = ch("NNEESWSWWWN");
  EXPECT_EQ(gg::path_end(gg::return_path(c)) + c.displacement(), (Cell{0, 0}));
  EXPECT_LE(gg::return_path(c).size(), c.size());
}

TEST(GGMachine, NeedsAgentCount) {
  EXPECT_THROW(gg::GeneralMachine{}.initial(std::nullopt), gg::Error);
  EXPECT_EQ(gg::GeneralMachine{}.initial("101").n, 5u);
}

TEST(GGRun, Singleton) {
  Configuration cfg;
  cfg.add({4, -2});
  for (auto kind : {gg::ApproachKind::LazyRandomWalk, gg::ApproachKind::ExpandingSearch}) {
    auto res = run_audited(kind, cfg, 1, gg::SchedulerStrategy{gg::Lockstep{}}, 1);
    EXPECT_EQ(res.outcome.kind, Outcome::Kind::Gathered);
    EXPECT_EQ(res.outcome.cell, (Cell{4, -2}));
  }
}

TEST(GGRun, AdjacentPairMeetsAtChampionStart) {
  Configuration cfg;
  cfg.add({0, 0});
  cfg.add({1, 0});
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto res = run_audited(gg::ApproachKind::LazyRandomWalk, cfg, 2, gg::SchedulerStrategy{gg::Lockstep{}}, seed);
    ASSERT_EQ(res.outcome.kind, Outcome::Kind::Gathered) << res.outcome.to_string();
    // Both start with empty characteristics, so the West agent loses and the East agent
    // brings it home.
    EXPECT_EQ(res.outcome.cell, (Cell{1, 0}));
  }
}

TEST(GGRun, ExpandingSearchSweepIsClean) {
  std::mt19937_64 rng(11);
  for (int agents = 2; agents <= 5; ++agents) {
    for (int i = 0; i < 15; ++i) {
      auto cfg = random_scene(rng, agents, agents <= 3 ? 3 : 1);
      const std::uint64_t seed = 100 * agents + i;
      auto res = run_audited(gg::ApproachKind::ExpandingSearch, cfg, agents, gg::SchedulerStrategy{gg::RandomFair{}}, seed);
      ASSERT_EQ(res.outcome.kind, Outcome::Kind::Gathered) << agents << " agents, seed " << seed << ": "
                                                          << res.outcome.to_string();
    }
  }
}

TEST(GGRun, SkewedSchedulersNeverMisdetect) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    auto cfg = random_scene(rng, 4, 1);
    gg::RandomFair fair{0.15 + 0.07 * (i % 10), 0.85 - 0.07 * (i % 10), 8};
    for (auto kind : {gg::ApproachKind::LazyRandomWalk, gg::ApproachKind::ExpandingSearch}) {
      auto res = run_audited(kind, cfg, 4, gg::SchedulerStrategy{fair}, 700 + i, 50000);
      EXPECT_NE(res.outcome.kind, Outcome::Kind::FalseDetection) << res.outcome.to_string();
      EXPECT_NE(res.outcome.kind, Outcome::Kind::Error) << res.outcome.to_string();
    }
  }
}

TEST(GGRun, UnderstatedCountMisdetects) {
  Configuration cfg;
  cfg.add({0, 0});
  cfg.add({1, 0});
  cfg.add({9, 9});
  auto frozen = gg::freeze_subset_strategy({2}, 1000000, gg::SchedulerStrategy{gg::RandomFair{}});
  gg::RunOptions<gg::GeneralMachine> opt;
  opt.record_trace = false;
  auto res = gg::run(gg::GeneralMachine{}, cfg, gg::encode_count(2), frozen, 3, 200000, opt);
  EXPECT_EQ(res.outcome.kind, Outcome::Kind::FalseDetection) << res.outcome.to_string();
}

TEST(GGRun, SerializationIsStable) {
  GGState q = gg::GeneralMachine{}.initial("11");
  EXPECT_EQ(gg::GeneralMachine{}.serialize(q), "approach n=3 ch= bag=[] role=undecided step=P");
  q.phase = GGPhase::Final;
  EXPECT_EQ(gg::GeneralMachine{}.serialize(q), "ω");
}
