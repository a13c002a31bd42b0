#include <gtest/gtest.h>

#include "gridgather/engine.hpp"
#include "toy_machines.hpp"

namespace gg = gridgather;
using gg::Cell;
using gg::Configuration;
using gg::Outcome;

namespace {

const gg::SchedulerStrategy kLockstep{gg::Lockstep{}};
const gg::SchedulerStrategy kFair{gg::RandomFair{}};

}  // namespace

TEST(Engine, SingletonGathersAfterOnePair) {
  gg::testing::Sitter m;
  auto res = gg::run(m, Configuration::initial({{2, 2}}), std::nullopt, kLockstep, 1, 10);
  EXPECT_EQ(res.outcome, Outcome::gathered(2, {2, 2}));
}

TEST(Engine, IsolatedPairIsFalseDetection) {
  gg::testing::Sitter m;
  auto res = gg::run(m, Configuration::initial({{0, 0}, {5, 0}}), std::nullopt, kLockstep, 1, 10);
  ASSERT_TRUE(res.outcome.is(Outcome::Kind::FalseDetection));
  EXPECT_EQ(res.outcome.round, 2);
  EXPECT_EQ(res.outcome.agent, 0u);
  EXPECT_EQ(res.outcome.witness_cell, (Cell{5, 0}));
}

TEST(Engine, NeighborsNeverFinishSoBudgetRunsOut) {
  gg::testing::Sitter m;
  auto res = gg::run(m, Configuration::initial({{0, 0}, {1, 0}}), std::nullopt, kFair, 3, 50);
  EXPECT_EQ(res.outcome, Outcome::budget_exhausted(50));
}

TEST(Engine, RejectsBadConfigurations) {
  gg::testing::Sitter m;
  EXPECT_THROW(gg::run(m, Configuration{}, std::nullopt, kLockstep, 1, 10), gg::Error);
  Configuration stacked = Configuration::initial({{0, 0}});
  stacked.add({0, 0});
  EXPECT_THROW(gg::run(m, stacked, std::nullopt, kLockstep, 1, 10), gg::Error);
}

TEST(Engine, LookSeesStartOfRoundSnapshot) {
  // Agent 0 commits a move East in round 2 while agent 1 looks in round 2: agent 1 must
  // still see agent 0 at its old cell.
  gg::testing::CoinWalker m;
  gg::Scripted s;
  s.events = {{1, 0, gg::Action::Look}, {2, 0, gg::Action::Commit}, {2, 1, gg::Action::Look}};
  gg::RunOptions<gg::testing::CoinWalker> opt;
  opt.scripted_bits = std::vector<bool>{true, false};
  auto res = gg::run(m, Configuration::initial({{0, 0}, {0, 1}}), std::nullopt, {s}, 0, 3, opt);
  EXPECT_EQ(res.final_cells[0], (Cell{1, 0}));
  auto look = res.trace.events[2];
  ASSERT_EQ(look.kind, gg::EventKind::Look);
  gg::Observation<int> expected;
  expected.add(gg::Slot::S, 0);
  EXPECT_EQ(look.detail, gg::hex64(gg::fnv1a(gg::serialize_observation(m, expected))));
}

TEST(Engine, ScriptedAlternationViolationIsError) {
  gg::testing::Sitter m;
  gg::Scripted s;
  s.events = {{1, 0, gg::Action::Commit}};
  auto res = gg::run(m, Configuration::initial({{0, 0}}), std::nullopt, {s}, 0, 5);
  EXPECT_TRUE(res.outcome.is(Outcome::Kind::Error));
  s.events = {{1, 0, gg::Action::Look}, {1, 0, gg::Action::Commit}};
  res = gg::run(m, Configuration::initial({{0, 0}}), std::nullopt, {s}, 0, 5);
  EXPECT_TRUE(res.outcome.is(Outcome::Kind::Error));
}

TEST(Engine, SameSeedSameTrace) {
  gg::testing::CoinWalker m;
  auto cfg = Configuration::initial({{0, 0}, {0, 3}, {2, 1}});
  auto a = gg::run(m, cfg, std::nullopt, kFair, 11, 200).trace.to_text();
  auto b = gg::run(m, cfg, std::nullopt, kFair, 11, 200).trace.to_text();
  auto c = gg::run(m, cfg, std::nullopt, kFair, 12, 200).trace.to_text();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(Engine, FreezeHoldsAgentsUntilThaw) {
  gg::testing::CoinWalker m;
  auto strat = gg::freeze_subset_strategy({1}, 30, kLockstep);
  auto res = gg::run(m, Configuration::initial({{0, 0}, {0, 5}}), std::nullopt, strat, 4, 60);
  for (const auto& e : res.trace.events) {
    if (e.agent == 1) {
      EXPECT_GE(e.round, 30);
    }
  }
  EXPECT_THROW(gg::freeze_subset_strategy({0}, 0, kLockstep), gg::Error);
}

TEST(Engine, RandomFairIsFair) {
  gg::testing::CoinWalker m;
  gg::RandomFair f;
  auto res = gg::run(m, Configuration::initial({{0, 0}, {0, 3}, {3, 3}}), std::nullopt, {f}, 9, 2000);
  auto window = gg::fairness_window({f});
  ASSERT_TRUE(window);
  EXPECT_EQ(gg::audit_fairness(res.trace, 3, *window, [](const std::string&) { return false; }), std::nullopt);
}

TEST(Engine, AuditorViolationStopsRun) {
  gg::testing::CoinWalker m;
  gg::RunOptions<gg::testing::CoinWalker> opt;
  opt.auditors.push_back([](const gg::World<gg::testing::CoinWalker>& w, const gg::RoundInfo<gg::testing::CoinWalker>&)
                             -> std::optional<std::string> {
    if (w.agents()[0].cell.x > 2) return "walked too far";
    return std::nullopt;
  });
  auto res = gg::run(m, Configuration::initial({{0, 0}}), std::nullopt, kLockstep, 2, 1000, opt);
  ASSERT_TRUE(res.outcome.is(Outcome::Kind::Error));
  EXPECT_NE(res.outcome.description.find("walked too far"), std::string::npos);
}

TEST(Trace, TextRoundTripAndReplay) {
  gg::testing::CoinWalker m;
  auto cfg = Configuration::initial({{0, 0}, {1, 1}});
  auto res = gg::run(m, cfg, std::nullopt, kFair, 5, 100);
  auto text = res.trace.to_text();
  auto parsed = gg::Trace::parse(text);
  EXPECT_EQ(parsed.to_text(), text);
  auto again = gg::replay(parsed, m, cfg, std::nullopt);
  EXPECT_EQ(again.to_text(), text);
}

TEST(Trace, ReplayNamesFirstDivergence) {
  gg::testing::CoinWalker m;
  auto cfg = Configuration::initial({{0, 0}, {1, 1}});
  auto trace = gg::run(m, cfg, std::nullopt, kLockstep, 5, 20).trace;
  std::size_t bit = 0;
  while (trace.events[bit].kind != gg::EventKind::Bit) ++bit;
  trace.events[bit].detail = trace.events[bit].detail == "1" ? "0" : "1";
  try {
    gg::replay(trace, m, cfg, std::nullopt);
    FAIL() << "replay accepted a tampered trace";
  } catch (const gg::Error& e) {
    EXPECT_NE(std::string(e.what()).find("diverges"), std::string::npos) << e.what();
  }
  EXPECT_THROW(gg::replay(trace, m, Configuration::initial({{0, 0}}), std::nullopt), gg::Error);
}

TEST(Outcome, TextRoundTrip) {
  for (const auto& o : {Outcome::gathered(4, {0, 1}), Outcome::false_detection(3, 1, {0, 0}, 2, {0, 5}),
                        Outcome::budget_exhausted(9), Outcome::error(2, "invariant violated: x y")})
    EXPECT_EQ(gg::parse_outcome(o.to_string()), o);
}

TEST(Run, KeepsGoingAfterVerdictWhenAsked) {
  gg::testing::Sitter m;
  Configuration cfg;
  cfg.add({0, 0});
  cfg.add({5, 0});
  gg::RunOptions<gg::testing::Sitter> opt;
  opt.stop_at_verdict = false;
  gg::Round last = 0;
  opt.on_round_end = [&](const gg::World<gg::testing::Sitter>&, gg::Round r) { last = r; };
  auto res = gg::run(m, cfg, std::nullopt, gg::SchedulerStrategy{gg::Lockstep{}}, 1, 50, opt);
  EXPECT_TRUE(res.outcome.is(Outcome::Kind::FalseDetection));
  EXPECT_EQ(last, 50);
}
