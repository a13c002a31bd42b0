// Copyright 2026 The GridGather Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// gridgather: run, sweep and inspect gathering scenarios.
//
// Exit status: 0 gathered / check passed, 2 round budget exhausted, 3 false detection,
// invariant violation or failed check, 1 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gridgather/harness.hpp"

namespace gg = gridgather;

namespace {

constexpr int kBadInput = 1;
constexpr int kCheckFailed = 3;

struct BadInput : gg::Error {
  using gg::Error::Error;
};

gg::Scenario load(const std::string& path) {
  try {
    return gg::load_scenario(path);
  } catch (const gg::Error& e) {
    throw BadInput(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw BadInput("cannot write '" + path + "'");
  out << text;
}

gg::MachineKind machine_flag(const std::string& name) {
  auto k = gg::machine_from_name(name);
  if (!k) throw BadInput("unknown machine '" + name + "' (contractible, connected, general)");
  return *k;
}

gg::ApproachKind approach_flag(const std::string& name) {
  auto k = gg::approach_from_name(name);
  if (!k) throw BadInput("unknown approach '" + name + "' (random-walk, expanding-search)");
  return *k;
}

template <typename F>
auto parsed(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const gg::Error& e) {
    throw BadInput(flag + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gathering of asynchronous agents on the grid"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gridgather 1.0.0");

  std::string scenario_path, trace_path, machine = "contractible", approach, sizes = "1..6",
                                         strategies = "lockstep;random-fair", seeds = "1", out_path;
  std::optional<std::uint64_t> seed;
  std::optional<gg::Round> max_rounds;
  std::optional<std::uint64_t> n;
  int max_size = 8, max_distance = 6;
  unsigned threads = 0;
  std::int64_t distance = 3;
  gg::Round rounds = 10000, t = 100;
  bool contractible_only = false, list = false;

  auto* run = app.add_subcommand("run", "Run one scenario and report its verdict");
  run->add_option("--scenario", scenario_path, "Scenario file")->required();
  run->add_option("--seed", seed, "Override the scenario seed");
  run->add_option("--max-rounds", max_rounds, "Override the round budget");
  run->add_option("--trace", trace_path, "Write the trace here");
  run->add_option("--approach", approach, "General machine route: random-walk or expanding-search");

  auto* sweep = app.add_subcommand("sweep", "Run every shape of the given sizes under several schedulers");
  sweep->add_option("--machine", machine, "contractible, connected or general")->capture_default_str();
  sweep->add_option("--sizes", sizes, "Sizes (agent counts for general): N, A..B or A,B")->capture_default_str();
  sweep->add_option("--strategies", strategies, "Semicolon-separated scheduler strategies")->capture_default_str();
  sweep->add_option("--seeds", seeds, "K for seeds 1..K, or A..B, or A,B")->capture_default_str();
  sweep->add_option("--max-rounds", max_rounds, "Round budget per run (default 100000)");
  sweep->add_option("--approach", approach, "General machine route");
  sweep->add_option("--max-distance", max_distance, "General machine: start cells within this distance")
      ->capture_default_str();
  sweep->add_option("--threads", threads, "Worker threads (0: all cores)")->capture_default_str();
  sweep->add_option("--out", out_path, "Also write the report here");

  auto* enumerate = app.add_subcommand("enumerate", "Count fixed polyominoes");
  enumerate->add_option("--sizes", sizes, "Sizes: N, A..B or A,B")->capture_default_str();
  enumerate->add_flag("--contractible-only", contractible_only, "Only polyominoes without holes");
  enumerate->add_flag("--list", list, "Print every polyomino");

  auto* lemma = app.add_subcommand("verify-lemma", "Check that every contractible polyomino has a removable agent");
  lemma->add_option("--max-size", max_size, "Largest size checked")->capture_default_str();
  lemma->add_option("--scenario", scenario_path, "Check this configuration instead");

  auto* lockstep = app.add_subcommand("demo-lockstep", "Two deterministic agents under lockstep keep their distance");
  lockstep->add_option("--machine", machine, "contractible or connected")->capture_default_str();
  lockstep->add_option("--distance", distance, "Starting distance (> 1)")->capture_default_str();
  lockstep->add_option("--rounds", rounds, "Rounds to check")->capture_default_str();

  auto* freeze = app.add_subcommand("demo-freeze", "Freeze the far agent of (0,0),(0,2),(0,t+3) until round t");
  freeze->add_option("--t", t, "Freeze length")->capture_default_str();
  freeze->add_option("--seeds", seeds, "K for seeds 1..K, or A..B, or A,B")->capture_default_str();
  freeze->add_option("--n", n, "Agent count handed to the machine (default 3)");
  freeze->add_option("--approach", approach, "General machine route");
  freeze->add_option("--max-rounds", max_rounds, "Round budget per run (default 100000)");

  auto* replay = app.add_subcommand("replay", "Re-execute a trace and check it is reproduced exactly");
  replay->add_option("--scenario", scenario_path, "Scenario the trace was recorded from")->required();
  replay->add_option("--trace", trace_path, "Trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    if (run->parsed()) {
      auto s = load(scenario_path);
      if (seed) s.seed = *seed;
      if (max_rounds) s.max_rounds = *max_rounds;
      if (!approach.empty()) s.approach = approach_flag(approach);
      try {
        gg::validate(s);
      } catch (const gg::Error& e) {
        throw BadInput(scenario_path + ": " + e.what());
      }
      auto r = gg::run_scenario(s, !trace_path.empty());
      if (!trace_path.empty()) write_file(trace_path, r.trace.to_text());
      std::cout << r.outcome.to_string() << "\n";
      return gg::exit_code(r.outcome);
    }

    if (sweep->parsed()) {
      gg::SweepOptions o;
      o.machine = machine_flag(machine);
      o.sizes = parsed("--sizes", [&] { return gg::parse_int_list(sizes); });
      o.strategies = parsed("--strategies", [&] { return gg::parse_strategy_list(strategies); });
      o.seeds = parsed("--seeds", [&] { return gg::parse_seeds(seeds); });
      if (max_rounds) o.max_rounds = *max_rounds;
      if (!approach.empty()) o.approach = approach_flag(approach);
      o.max_distance = max_distance;
      o.threads = threads;
      if (o.machine != gg::MachineKind::General)
        for (int size : o.sizes)
          if (size < 1 || size > gg::enumeration_limit())
            throw BadInput("--sizes: " + std::to_string(size) + " outside [1, " +
                           std::to_string(gg::enumeration_limit()) + "]");
      auto report = gg::sweep(o);
      const auto text = report.to_text();
      std::cout << text;
      if (!out_path.empty()) write_file(out_path, text);
      return report.passed() ? 0 : kCheckFailed;
    }

    if (enumerate->parsed()) {
      auto list_sizes = parsed("--sizes", [&] { return gg::parse_int_list(sizes); });
      std::cout << parsed("--sizes", [&] { return gg::enumeration_report(list_sizes, contractible_only, list); });
      return 0;
    }

    if (lemma->parsed()) {
      if (!scenario_path.empty()) {
        auto s = load(scenario_path);
        if (!gg::is_contractible(s.configuration))
          throw BadInput(scenario_path + ": configuration is outside the lemma's scope (not contractible)");
        const bool holds = s.configuration.cell_count() < 2 || gg::lemma_geo_holds(s.configuration);
        std::cout << "verify-lemma " << scenario_path << ": " << (holds ? "holds" : "counterexample") << "\n";
        return holds ? 0 : kCheckFailed;
      }
      auto report = parsed("--max-size", [&] { return gg::verify_lemma(max_size); });
      std::cout << report.to_text();
      return report.counterexamples.empty() ? 0 : kCheckFailed;
    }

    if (lockstep->parsed()) {
      auto kind = machine_flag(machine);
      auto report = parsed("demo-lockstep", [&] { return gg::demo_lockstep(kind, distance, rounds); });
      std::cout << report.text;
      return report.passed ? 0 : kCheckFailed;
    }

    if (freeze->parsed()) {
      auto seed_list = parsed("--seeds", [&] { return gg::parse_seeds(seeds); });
      auto kind = approach.empty() ? gg::ApproachKind::LazyRandomWalk : approach_flag(approach);
      if (n && *n == 0) throw BadInput("--n: must be positive");
      auto report = parsed("demo-freeze", [&] {
        return gg::demo_freeze(t, seed_list, n.value_or(3), kind, max_rounds.value_or(100000));
      });
      std::cout << report.text;
      return report.false_detection == 0 && report.errors == 0 ? 0 : kCheckFailed;
    }

    if (replay->parsed()) {
      auto s = load(scenario_path);
      gg::Trace recorded;
      try {
        recorded = gg::Trace::parse(gg::read_file(trace_path));
      } catch (const gg::Error& e) {
        throw BadInput(trace_path + ": " + e.what());
      }
      try {
        gg::validate(s);
      } catch (const gg::Error& e) {
        throw BadInput(scenario_path + ": " + e.what());
      }
      try {
        gg::replay_scenario(s, recorded);
      } catch (const gg::Error& e) {
        std::cout << "replay " << trace_path << ": " << e.what() << "\n";
        return kCheckFailed;
      }
      std::cout << "replay " << trace_path << ": " << recorded.events.size() << " events reproduced, verdict "
                << recorded.verdict.to_string() << "\n";
      return 0;
    }
  } catch (const BadInput& e) {
    std::cerr << "gridgather: " << e.what() << "\n";
    return kBadInput;
  } catch (const gg::Error& e) {
    std::cerr << "gridgather: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
