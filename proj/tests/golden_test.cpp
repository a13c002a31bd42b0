#include <gtest/gtest.h>

#include <string>

#include "gridgather/harness.hpp"

namespace gg = gridgather;

namespace {

std::string golden(const std::string& file) { return std::string(GRIDGATHER_GOLDEN_DIR) + "/" + file; }

class Golden : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST_P(Golden, RerunIsByteIdentical) {
  auto s = gg::load_scenario(golden(GetParam() + ".scn"));
  auto text = gg::read_file(golden(GetParam() + ".trc"));
  EXPECT_EQ(gg::run_scenario(s).trace.to_text(), text);
}

TEST_P(Golden, ReplayReproducesTrace) {
  auto s = gg::load_scenario(golden(GetParam() + ".scn"));
  auto recorded = gg::Trace::parse(gg::read_file(golden(GetParam() + ".trc")));
  auto replayed = gg::replay_scenario(s, recorded);
  EXPECT_EQ(replayed.to_text(), recorded.to_text());
}

TEST_P(Golden, TamperedTraceIsCaught) {
  auto s = gg::load_scenario(golden(GetParam() + ".scn"));
  auto recorded = gg::Trace::parse(gg::read_file(golden(GetParam() + ".trc")));
  for (auto& e : recorded.events) {
    if (e.kind != gg::EventKind::Commit) continue;
    e.detail += "x";
    break;
  }
  EXPECT_THROW(gg::replay_scenario(s, recorded), gg::Error);
}

INSTANTIATE_TEST_SUITE_P(Traces, Golden,
                         ::testing::Values("contractible_domino", "contractible_path3", "connected_domino",
                                           "connected_path3", "general_domino", "general_path3"));
