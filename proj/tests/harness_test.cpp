#include <gtest/gtest.h>

#include "gridgather/harness.hpp"

namespace gg = gridgather;
using gg::Cell;
using gg::MachineKind;
using gg::Outcome;

namespace {

int error_column(std::string_view text) {
  try {
    gg::parse_scenario(text);
  } catch (const gg::ParseError& e) {
    return e.line() * 1000 + e.column();
  }
  return -1;
}

std::string error_text(const gg::Scenario& s) {
  try {
    gg::validate(s);
  } catch (const gg::Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Scenario, ParsesCellsBlock) {
  auto s = gg::parse_scenario(
      "# two dominoes\n"
      "name: dominos\n"
      "machine: contractible\n"
      "strategy: random-fair 0.3 0.7 4\n"
      "seed: 7\n"
      "max-rounds: 5000\n"
      "cells:\n"
      "0 0\n"
      "1 0   # east\n"
      "\n"
      "0 1\n"
      "1 1\n");
  EXPECT_EQ(s.name, "dominos");
  EXPECT_EQ(s.machine, MachineKind::Contractible);
  EXPECT_EQ(s.seed, 7u);
  EXPECT_EQ(s.max_rounds, 5000);
  EXPECT_EQ(s.configuration.agent_count(), 4u);
  EXPECT_EQ(gg::describe(s.strategy), "random-fair 0.3 0.7 4");
  EXPECT_NO_THROW(gg::validate(s));
}

TEST(Scenario, FormatRoundTrips) {
  auto s = gg::parse_scenario("machine: general\nn: 3\napproach: expanding-search\nrandom: 3 6 9\n");
  auto again = gg::parse_scenario(gg::format_scenario(s));
  EXPECT_EQ(again.configuration, s.configuration);
  EXPECT_EQ(again.n, s.n);
  EXPECT_EQ(again.approach, gg::ApproachKind::ExpandingSearch);
  EXPECT_EQ(gg::describe(again.strategy), gg::describe(s.strategy));
}

TEST(Scenario, PolyominoGenerator) {
  auto s = gg::parse_scenario("machine: connected\npolyomino: 4 0\n");
  EXPECT_EQ(s.configuration, gg::enumerate_polyominoes(4).front());
  EXPECT_EQ(error_column("machine: connected\npolyomino: 4 19\n"), 2014);
}

TEST(Scenario, DiagnosticsCarryLineAndColumn) {
  EXPECT_EQ(error_column("machine: contractible\ncells:\n0 0\n1 x\n"), 4003);
  EXPECT_EQ(error_column("machine: contractible\ncells:\n0 0 7\n"), 3005);
  EXPECT_EQ(error_column("machine: contractible\ncolour: red\n"), 2001);
  EXPECT_EQ(error_column("machine: robots\n"), 1010);
  EXPECT_EQ(error_column("machine: general\nn: 0\n"), 2004);
  EXPECT_EQ(error_column("machine: general\nstrategy: random-fair 0.5 1.5 8\n"), 2027);
  EXPECT_EQ(error_column("machine: general\nstrategy: freeze 3 [a] lockstep\n"), 2021);
  EXPECT_EQ(error_column("machine: general\nseed: 1\nseed: 2\n"), 3001);
  EXPECT_EQ(error_column("seed: 1\n"), 1001);
  EXPECT_EQ(error_column("machine: general\nhello\n"), 2001);
  EXPECT_EQ(error_column("machine: general\ncells:\n0 0\n0 0\n"), 2001);
}

TEST(Scenario, PreconditionsRejected) {
  gg::Scenario ring;
  ring.machine = MachineKind::Contractible;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != 1 || y != 1) ring.configuration.add({x, y});
  EXPECT_EQ(error_text(ring), "configuration not contractible");

  gg::Scenario general;
  general.machine = MachineKind::General;
  general.configuration.add({0, 0});
  general.configuration.add({3, 0});
  general.n = 3;
  EXPECT_EQ(error_text(general), "input n=3 does not match 2 agents");
  general.n.reset();
  EXPECT_EQ(error_text(general), "general machine needs input n");

  gg::Scenario apart;
  apart.machine = MachineKind::Connected;
  apart.configuration = general.configuration;
  EXPECT_EQ(error_text(apart), "configuration not connected");
}

TEST(Strategy, DescribeRoundTrips) {
  for (std::string text : {"lockstep", "random-fair 0.5 0.5 8", "freeze 100 [2] lockstep",
                           "freeze 4 [0,3] random-fair 0.25 0.75 3"}) {
    EXPECT_EQ(gg::describe(gg::parse_strategy(text)), text);
  }
  auto list = gg::parse_strategy_list("lockstep;random-fair");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_THROW(gg::parse_strategy_list("lockstep;bogus"), gg::Error);
  EXPECT_THROW(gg::parse_strategy("freeze 0 [1] lockstep"), gg::Error);
}

TEST(Lists, SizesAndSeeds) {
  EXPECT_EQ(gg::parse_int_list("2..4"), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(gg::parse_int_list("1,5"), (std::vector<int>{1, 5}));
  EXPECT_EQ(gg::parse_seeds("3"), (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(gg::parse_seeds("10..11"), (std::vector<std::uint64_t>{10, 11}));
  EXPECT_THROW(gg::parse_int_list("4..2"), gg::Error);
  EXPECT_THROW(gg::parse_int_list("x"), gg::Error);
}

TEST(ExitCodes, FollowTheVerdict) {
  EXPECT_EQ(gg::exit_code(Outcome::gathered(3, {0, 0})), 0);
  EXPECT_EQ(gg::exit_code(Outcome::budget_exhausted(10)), 2);
  EXPECT_EQ(gg::exit_code(Outcome::false_detection(3, 0, {0, 0}, 1, {1, 0})), 3);
  EXPECT_EQ(gg::exit_code(Outcome::error(3, "invariant violated: x")), 3);
}

TEST(RunScenario, DominoGathers) {
  auto s = gg::parse_scenario("machine: contractible\nstrategy: lockstep\ncells:\n0 0\n1 0\n");
  auto r = gg::run_scenario(s);
  EXPECT_TRUE(r.outcome.is(Outcome::Kind::Gathered));
  EXPECT_EQ(gg::exit_code(r.outcome), 0);
  EXPECT_EQ(r.trace.verdict, r.outcome);
}

TEST(RandomCluster, StaysWithinDistance) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto cfg = gg::random_cluster(3, 6, seed);
    ASSERT_EQ(cfg.agent_count(), 3u);
    EXPECT_TRUE(cfg.is_initial());
    for (const auto& c : cfg.cells()) EXPECT_LE(gg::distance(c, Cell{0, 0}), 6);
  }
  EXPECT_EQ(gg::random_cluster(4, 3, 17), gg::random_cluster(4, 3, 17));
}

TEST(Sweep, ReportIsIndependentOfThreadCount) {
  gg::SweepOptions o;
  o.machine = MachineKind::Contractible;
  o.sizes = {1, 2, 3, 4};
  o.seeds = {1, 2};
  o.threads = 1;
  auto one = gg::sweep(o);
  o.threads = 4;
  auto four = gg::sweep(o);
  EXPECT_EQ(one.to_text(), four.to_text());
  EXPECT_TRUE(one.passed());
  EXPECT_EQ(one.gathered, one.entries.size());
  // 1 + 2 + 6 + 19 shapes, each once under lockstep and twice under random-fair.
  EXPECT_EQ(one.entries.size(), 28u * 3);
}

TEST(Sweep, GeneralUsesOneClusterPerSeed) {
  gg::SweepOptions o;
  o.machine = MachineKind::General;
  o.sizes = {2};
  o.strategies = {gg::SchedulerStrategy{gg::RandomFair{}}};
  o.seeds = {1, 2, 3};
  o.approach = gg::ApproachKind::ExpandingSearch;
  auto r = gg::sweep(o);
  EXPECT_EQ(r.entries.size(), 3u);
  EXPECT_TRUE(r.passed());
}

TEST(Lemma, SmallSizes) {
  auto vacuous = gg::verify_lemma(1);
  EXPECT_EQ(vacuous.checked, 0u);
  EXPECT_TRUE(vacuous.counterexamples.empty());
  auto six = gg::verify_lemma(6);
  EXPECT_GT(six.checked, 0u);
  EXPECT_TRUE(six.counterexamples.empty());
}

TEST(Lemma, HoledRingOutOfScope) {
  gg::Configuration ring;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != 1 || y != 1) ring.add({x, y});
  EXPECT_THROW(gg::lemma_geo_holds(ring), gg::Error);
}

TEST(DemoLockstep, DistancePreserved) {
  EXPECT_TRUE(gg::demo_lockstep(MachineKind::Connected, 3, 2000).passed);
  EXPECT_TRUE(gg::demo_lockstep(MachineKind::Contractible, 2, 2000).passed);
  EXPECT_THROW(gg::demo_lockstep(MachineKind::Contractible, 1, 10), gg::Error);
  EXPECT_THROW(gg::demo_lockstep(MachineKind::General, 3, 10), gg::Error);
}

TEST(DemoFreeze, CorrectCountIsImmune) {
  auto good = gg::demo_freeze(1, {1, 2, 3, 4, 5}, 3, gg::ApproachKind::ExpandingSearch, 50000);
  EXPECT_EQ(good.false_detection, 0u);
  EXPECT_EQ(good.errors, 0u);
  auto bad = gg::demo_freeze(100, {1, 2, 3, 4, 5}, 2, gg::ApproachKind::ExpandingSearch, 50000);
  EXPECT_GE(bad.false_detection, 1u);
}
