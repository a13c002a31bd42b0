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

#ifndef GRIDGATHER_HARNESS_HPP
#define GRIDGATHER_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "gridgather/connected.hpp"
#include "gridgather/contractible.hpp"
#include "gridgather/engine.hpp"
#include "gridgather/general.hpp"
#include "gridgather/grid.hpp"

namespace gridgather {

enum class MachineKind : std::uint8_t { Contractible, Connected, General };

inline std::string_view machine_name(MachineKind k) {
  static constexpr std::string_view names[] = {"contractible", "connected", "general"};
  return names[static_cast<int>(k)];
}

inline std::optional<MachineKind> machine_from_name(std::string_view s) {
  for (auto k : {MachineKind::Contractible, MachineKind::Connected, MachineKind::General})
    if (machine_name(k) == s) return k;
  return std::nullopt;
}

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// ---------------------------------------------------------------------------
// Small value parsers. Each throws Error carrying the 0-based offset of the bad token
// through `where` so callers can report columns.

namespace detail {

struct Token {
  std::string text;
  std::size_t pos = 0;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    out.push_back({std::string(s.substr(i, j - i)), i});
    i = j;
  }
  return out;
}

struct TokenError : Error {
  TokenError(std::size_t p, const std::string& what) : Error(what), pos(p) {}
  std::size_t pos;
};

template <typename T>
T number(const Token& t, std::string_view what) {
  std::istringstream ss(t.text);
  T v{};
  char extra;
  if (!(ss >> v) || (ss >> extra)) throw TokenError(t.pos, "expected " + std::string(what) + ", got '" + t.text + "'");
  return v;
}

inline SchedulerStrategy strategy_tokens(const std::vector<Token>& toks, std::size_t& i, std::size_t end_pos) {
  if (i >= toks.size()) throw TokenError(end_pos, "expected a scheduler strategy");
  const Token& head = toks[i++];
  if (head.text == "lockstep") return {Lockstep{}};
  if (head.text == "random-fair") {
    RandomFair f;
    if (i < toks.size() && toks[i].text != "]") {
      if (i + 3 > toks.size()) throw TokenError(toks[i].pos, "random-fair takes p_look p_commit cap");
      f.p_look = number<double>(toks[i], "a probability");
      f.p_commit = number<double>(toks[i + 1], "a probability");
      f.cap = number<int>(toks[i + 2], "an integer cap");
      for (std::size_t k = 0; k < 2; ++k) {
        double p = k == 0 ? f.p_look : f.p_commit;
        if (!(p > 0.0 && p <= 1.0)) throw TokenError(toks[i + k].pos, "probability must lie in (0, 1]");
      }
      if (f.cap < 1) throw TokenError(toks[i + 2].pos, "cap must be positive");
      i += 3;
    }
    return {f};
  }
  if (head.text == "freeze") {
    if (i + 1 >= toks.size()) throw TokenError(head.pos, "freeze takes a thaw round, [ids] and an inner strategy");
    const Round thaw = number<Round>(toks[i], "a thaw round");
    if (thaw < 1) throw TokenError(toks[i].pos, "thaw round must be at least 1");
    const Token& ids = toks[i + 1];
    if (ids.text.size() < 2 || ids.text.front() != '[' || ids.text.back() != ']')
      throw TokenError(ids.pos, "expected an agent list like [2] or [0,3]");
    std::set<AgentId> frozen;
    std::string body = ids.text.substr(1, ids.text.size() - 2);
    std::size_t start = 0;
    while (!body.empty() && start <= body.size()) {
      std::size_t comma = body.find(',', start);
      std::string part = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      frozen.insert(number<AgentId>({part, ids.pos + 1 + start}, "an agent id"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    i += 2;
    auto inner = strategy_tokens(toks, i, end_pos);
    return freeze_subset_strategy(std::move(frozen), thaw, std::move(inner));
  }
  throw TokenError(head.pos, "unknown strategy '" + head.text + "'");
}

}  // namespace detail

/// Parses the text produced by describe(): "lockstep", "random-fair [p_look p_commit cap]",
/// or "freeze THAW [ids] INNER".
inline SchedulerStrategy parse_strategy(std::string_view text) {
  auto toks = detail::tokenize(text);
  std::size_t i = 0;
  auto s = detail::strategy_tokens(toks, i, text.size());
  if (i != toks.size()) throw detail::TokenError(toks[i].pos, "unexpected '" + toks[i].text + "'");
  return s;
}

/// "4", "2..8" or "1,3,5".
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  auto bad = [&] { return Error("expected N, A..B or A,B,C; got '" + std::string(text) + "'"); };
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    int lo = 0, hi = 0;
    try {
      lo = std::stoi(std::string(text.substr(0, dots)));
      hi = std::stoi(std::string(text.substr(dots + 2)));
    } catch (const std::exception&) {
      throw bad();
    }
    if (lo > hi) throw bad();
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::string item;
  std::istringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoi(item, &used));
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != item.size()) throw bad();
  }
  if (out.empty()) throw bad();
  return out;
}

/// "K" means seeds 1..K; ranges and lists as in parse_int_list.
inline std::vector<std::uint64_t> parse_seeds(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (text.find("..") == std::string_view::npos && text.find(',') == std::string_view::npos) {
    for (int k = 1; k <= parse_int_list(text).front(); ++k) out.push_back(static_cast<std::uint64_t>(k));
    return out;
  }
  for (int v : parse_int_list(text)) {
    if (v < 0) throw Error("seeds must be non-negative");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

/// Semicolon-separated strategy list, e.g. "lockstep;random-fair".
inline std::vector<SchedulerStrategy> parse_strategy_list(std::string_view text) {
  std::vector<SchedulerStrategy> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    auto part = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    try {
      out.push_back(parse_strategy(part));
    } catch (const detail::TokenError& e) {
      throw Error("strategy '" + std::string(part) + "' at offset " + std::to_string(start + e.pos + 1) + ": " +
                  e.what());
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scenario

/// Agents placed on distinct cells, all within Manhattan distance max_distance of the first.
inline Configuration random_cluster(int agents, int max_distance, std::uint64_t seed) {
  if (agents < 1) throw Error("need at least one agent");
  if (max_distance < 1 && agents > 1) throw Error("distance bound must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> u(-max_distance, max_distance);
  Configuration cfg;
  cfg.add({0, 0});
  std::size_t guard = 0;
  while (static_cast<int>(cfg.agent_count()) < agents) {
    if (++guard > 1000000) throw Error("cannot place that many agents within the distance bound");
    Cell c{u(rng), u(rng)};
    if (distance(c, Cell{0, 0}) > max_distance || cfg.contains(c)) continue;
    cfg.add(c);
  }
  return cfg;
}

struct Scenario {
  std::string name = "unnamed";
  MachineKind machine = MachineKind::Contractible;
  Configuration configuration;
  std::optional<std::uint64_t> n;
  SchedulerStrategy strategy{RandomFair{}};
  std::uint64_t seed = 1;
  Round max_rounds = 100000;
  ApproachKind approach = ApproachKind::LazyRandomWalk;

  std::optional<std::string> input() const {
    if (!n) return std::nullopt;
    return encode_count(*n);
  }
};

/// Checks the premises the machines rely on.
inline void validate(const Scenario& s) {
  const auto& cfg = s.configuration;
  if (cfg.empty()) throw Error("configuration has no agents");
  if (!cfg.is_initial()) throw Error("configuration has two agents on one cell");
  switch (s.machine) {
    case MachineKind::Contractible:
      if (s.n) throw Error("contractible machine takes no input n");
      if (!is_contractible(cfg)) throw Error("configuration not contractible");
      break;
    case MachineKind::Connected:
      if (s.n) throw Error("connected machine takes no input n");
      if (!is_connected(cfg)) throw Error("configuration not connected");
      break;
    case MachineKind::General:
      if (!s.n) throw Error("general machine needs input n");
      if (*s.n != cfg.agent_count())
        throw Error("input n=" + std::to_string(*s.n) + " does not match " + std::to_string(cfg.agent_count()) +
                    " agents");
      break;
  }
}

/// Reads "key: value" lines, then an optional "cells:" block of "x y" lines. '#' starts a
/// comment. The configuration comes from the cells block, "polyomino: SIZE INDEX" or
/// "random: AGENTS MAX_DISTANCE SEED".
inline Scenario parse_scenario(std::string_view text) {
  Scenario s;
  std::map<std::string, int> seen;
  bool in_cells = false, have_machine = false;
  std::optional<std::pair<int, detail::Token>> polyomino_at, random_at;
  std::vector<detail::Token> polyomino_args, random_args;
  std::vector<Cell> cells;
  int cells_line = 0;

  std::size_t start = 0;
  int lineno = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string line(text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = detail::tokenize(line);
    if (toks.empty()) continue;
    auto fail = [&](std::size_t pos, const std::string& what) -> ParseError {
      return ParseError(lineno, static_cast<int>(pos) + 1, what);
    };

    if (in_cells) {
      if (toks.size() != 2) throw fail(toks.size() > 2 ? toks[2].pos : toks[0].pos, "expected 'x y'");
      try {
        cells.push_back({detail::number<std::int64_t>(toks[0], "an integer x"),
                         detail::number<std::int64_t>(toks[1], "an integer y")});
      } catch (const detail::TokenError& e) {
        throw fail(e.pos, e.what());
      }
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string::npos) throw fail(toks[0].pos, "expected 'key: value'");
    std::string key = line.substr(toks[0].pos, colon - toks[0].pos);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    const std::size_t value_pos = colon + 1;
    std::string_view value_view = std::string_view(line).substr(value_pos);
    auto values = detail::tokenize(value_view);
    for (auto& t : values) t.pos += value_pos;
    const std::size_t value_at = values.empty() ? line.size() : values.front().pos;
    if (seen.count(key)) throw fail(toks[0].pos, "duplicate key '" + key + "' (first on line " + std::to_string(seen[key]) + ")");
    seen[key] = lineno;

    auto single = [&](std::string_view what) -> const detail::Token& {
      if (values.empty()) throw fail(value_at, "missing " + std::string(what));
      if (values.size() > 1) throw fail(values[1].pos, "unexpected '" + values[1].text + "'");
      return values.front();
    };

    try {
      if (key == "cells") {
        if (!values.empty()) throw fail(values.front().pos, "cells block starts on the next line");
        in_cells = true;
        cells_line = lineno;
      } else if (key == "name") {
        if (values.empty()) throw fail(value_at, "missing name");
        s.name = line.substr(values.front().pos);
        while (!s.name.empty() && (s.name.back() == ' ' || s.name.back() == '\r')) s.name.pop_back();
      } else if (key == "machine") {
        const auto& t = single("machine name");
        auto k = machine_from_name(t.text);
        if (!k) throw fail(t.pos, "unknown machine '" + t.text + "' (contractible, connected, general)");
        s.machine = *k;
        have_machine = true;
      } else if (key == "n") {
        const auto& t = single("agent count");
        auto n = detail::number<std::int64_t>(t, "a positive agent count");
        if (n < 1) throw fail(t.pos, "n must be positive");
        s.n = static_cast<std::uint64_t>(n);
      } else if (key == "seed") {
        s.seed = detail::number<std::uint64_t>(single("seed"), "a non-negative seed");
      } else if (key == "max-rounds") {
        const auto& t = single("round budget");
        s.max_rounds = detail::number<Round>(t, "a round budget");
        if (s.max_rounds < 1) throw fail(t.pos, "max-rounds must be at least 1");
      } else if (key == "strategy") {
        std::size_t i = 0;
        s.strategy = detail::strategy_tokens(values, i, value_at);
        if (i != values.size()) throw fail(values[i].pos, "unexpected '" + values[i].text + "'");
      } else if (key == "approach") {
        const auto& t = single("approach route");
        auto k = approach_from_name(t.text);
        if (!k) throw fail(t.pos, "unknown approach '" + t.text + "' (random-walk, expanding-search)");
        s.approach = *k;
      } else if (key == "polyomino") {
        if (values.size() != 2) throw fail(value_at, "expected 'SIZE INDEX'");
        polyomino_at = {lineno, values.front()};
        polyomino_args = values;
      } else if (key == "random") {
        if (values.size() != 3) throw fail(value_at, "expected 'AGENTS MAX_DISTANCE SEED'");
        random_at = {lineno, values.front()};
        random_args = values;
      } else {
        throw fail(toks[0].pos, "unknown key '" + key + "'");
      }
    } catch (const detail::TokenError& e) {
      throw fail(e.pos, e.what());
    }
  }

  if (!have_machine) throw ParseError(1, 1, "missing 'machine:'");
  const int sources = (cells_line ? 1 : 0) + (polyomino_at ? 1 : 0) + (random_at ? 1 : 0);
  if (sources != 1) throw ParseError(1, 1, "give exactly one of 'cells:', 'polyomino:' or 'random:'");

  if (cells_line) {
    if (cells.empty()) throw ParseError(cells_line, 1, "cells block is empty");
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (s.configuration.contains(cells[i]))
        throw ParseError(cells_line, 1, "cell " + to_string(cells[i]) + " listed twice");
      s.configuration.add(cells[i]);
    }
  } else if (polyomino_at) {
    auto fail = [&](std::size_t pos, const std::string& what) {
      return ParseError(polyomino_at->first, static_cast<int>(pos) + 1, what);
    };
    try {
      const int size = detail::number<int>(polyomino_args[0], "a size");
      const auto index = detail::number<std::size_t>(polyomino_args[1], "an index");
      if (size < 1 || size > enumeration_limit())
        throw fail(polyomino_args[0].pos, "size outside [1, " + std::to_string(enumeration_limit()) + "]");
      auto all = enumerate_polyominoes(size, s.machine == MachineKind::Contractible);
      if (index >= all.size())
        throw fail(polyomino_args[1].pos, "index past the " + std::to_string(all.size()) + " polyominoes of that size");
      s.configuration = all[index];
    } catch (const detail::TokenError& e) {
      throw fail(e.pos, e.what());
    }
  } else {
    auto fail = [&](std::size_t pos, const std::string& what) {
      return ParseError(random_at->first, static_cast<int>(pos) + 1, what);
    };
    try {
      const int agents = detail::number<int>(random_args[0], "an agent count");
      const int dist = detail::number<int>(random_args[1], "a distance bound");
      const auto seed = detail::number<std::uint64_t>(random_args[2], "a seed");
      if (agents < 1) throw fail(random_args[0].pos, "agent count must be positive");
      if (dist < 1) throw fail(random_args[1].pos, "distance bound must be positive");
      s.configuration = random_cluster(agents, dist, seed);
    } catch (const detail::TokenError& e) {
      throw fail(e.pos, e.what());
    }
  }
  return s;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Scenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

inline std::string format_scenario(const Scenario& s) {
  std::string out = "name: " + s.name + "\nmachine: " + std::string(machine_name(s.machine)) + "\n";
  if (s.n) out += "n: " + std::to_string(*s.n) + "\n";
  if (s.machine == MachineKind::General) out += "approach: " + std::string(approach_name(s.approach)) + "\n";
  out += "strategy: " + describe(s.strategy) + "\nseed: " + std::to_string(s.seed) +
         "\nmax-rounds: " + std::to_string(s.max_rounds) + "\ncells:\n" + format_cells(s.configuration);
  return out;
}

// ---------------------------------------------------------------------------
// Running

struct ScenarioRun {
  Outcome outcome;
  Trace trace;
};

/// Calls f(machine, auditors) with the machine the scenario names.
template <typename F>
auto with_machine(const Scenario& s, F&& f) {
  switch (s.machine) {
    case MachineKind::Contractible: return f(cc_machine(), contractible_auditors());
    case MachineKind::Connected: return f(cg_machine(), connected_auditors(s.configuration));
    case MachineKind::General: break;
  }
  return f(GeneralMachine(s.approach), general_auditors());
}

/// One fully audited run. A connected run that gathers away from the North-East target is
/// reported as an invariant violation.
inline ScenarioRun run_scenario(const Scenario& s, bool record_trace = true) {
  validate(s);
  return with_machine(s, [&](const auto& machine, auto auditors) {
    using M = std::decay_t<decltype(machine)>;
    RunOptions<M> opt;
    opt.record_trace = record_trace;
    opt.auditors = std::move(auditors);
    auto res = run(machine, s.configuration, s.input(), s.strategy, s.seed, s.max_rounds, opt);
    if constexpr (std::is_same_v<M, GeneralMachine>) res.trace.header.emplace_back("approach", approach_name(s.approach));
    if (s.machine == MachineKind::Connected && res.outcome.is(Outcome::Kind::Gathered)) {
      const Cell target = north_east_target(s.configuration.cells());
      if (res.outcome.cell != target) {
        res.outcome = Outcome::error(res.outcome.round, "invariant violated: gathered at " + to_string(res.outcome.cell) +
                                                            " instead of " + to_string(target));
        res.trace.verdict = res.outcome;
      }
    }
    return ScenarioRun{res.outcome, std::move(res.trace)};
  });
}

/// Replays a recorded trace against the scenario it claims to come from.
inline Trace replay_scenario(const Scenario& s, const Trace& recorded) {
  validate(s);
  return with_machine(s, [&](const auto& machine, auto) { return replay(recorded, machine, s.configuration, s.input()); });
}

/// 0 gathered, 2 budget exhausted, 3 false detection or any other protocol error.
inline int exit_code(const Outcome& o) {
  switch (o.kind) {
    case Outcome::Kind::Gathered: return 0;
    case Outcome::Kind::BudgetExhausted: return 2;
    case Outcome::Kind::FalseDetection:
    case Outcome::Kind::Error: return 3;
  }
  return 3;
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepOptions {
  MachineKind machine = MachineKind::Contractible;
  std::vector<int> sizes;  // polyomino sizes, or agent counts for the general machine
  std::vector<SchedulerStrategy> strategies{SchedulerStrategy{Lockstep{}}, SchedulerStrategy{RandomFair{}}};
  std::vector<std::uint64_t> seeds{1};
  Round max_rounds = 100000;
  ApproachKind approach = ApproachKind::LazyRandomWalk;
  int max_distance = 6;  // general machine: start cells within this distance of the first
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepEntry {
  std::string label;
  Outcome outcome;
};

struct SweepReport {
  std::string title;
  std::vector<SweepEntry> entries;
  std::size_t gathered = 0, budget_exhausted = 0, false_detection = 0, violations = 0;
  std::vector<Round> gather_rounds;  // sorted

  bool passed() const { return false_detection == 0 && violations == 0; }
  double gathered_fraction() const {
    return entries.empty() ? 0.0 : static_cast<double>(gathered) / static_cast<double>(entries.size());
  }

  std::string to_text() const {
    std::ostringstream os;
    os << title << "\n";
    os << "runs " << entries.size() << "\n";
    os << "gathered " << gathered << "\n";
    os << "budget-exhausted " << budget_exhausted << "\n";
    os << "false-detection " << false_detection << "\n";
    os << "invariant-violations " << violations << "\n";
    if (!gather_rounds.empty())
      os << "rounds-to-gather min " << gather_rounds.front() << " median " << gather_rounds[(gather_rounds.size() - 1) / 2]
         << " max " << gather_rounds.back() << "\n";
    char frac[32];
    std::snprintf(frac, sizeof frac, "%.4f", gathered_fraction());
    os << "gathered-fraction " << frac << "\n";
    for (const auto& e : entries)
      if (!e.outcome.is(Outcome::Kind::Gathered)) os << "not-gathered " << e.label << ": " << e.outcome.to_string() << "\n";
    return os.str();
  }
};

inline std::vector<Scenario> sweep_scenarios(const SweepOptions& o) {
  std::vector<Scenario> out;
  for (int size : o.sizes) {
    std::vector<std::pair<std::string, Configuration>> shapes;
    if (o.machine == MachineKind::General) {
      for (auto seed : o.seeds)
        shapes.emplace_back("agents=" + std::to_string(size) + " cluster=" + std::to_string(seed),
                            random_cluster(size, o.max_distance, seed));
    } else {
      auto all = enumerate_polyominoes(size, o.machine == MachineKind::Contractible);
      for (std::size_t i = 0; i < all.size(); ++i)
        shapes.emplace_back("size=" + std::to_string(size) + " #" + std::to_string(i), std::move(all[i]));
    }
    for (std::size_t k = 0; k < shapes.size(); ++k) {
      for (const auto& strat : o.strategies) {
        const bool once = o.machine != MachineKind::General && std::holds_alternative<Lockstep>(strat.kind);
        for (std::size_t si = 0; si < o.seeds.size(); ++si) {
          // General: cluster k comes from seed k and runs under that seed.
          if (o.machine == MachineKind::General && si != k) continue;
          if (once && si > 0) break;
          Scenario s;
          s.name = shapes[k].first + " " + describe(strat) + " seed=" + std::to_string(o.seeds[si]);
          s.machine = o.machine;
          s.configuration = shapes[k].second;
          if (o.machine == MachineKind::General) s.n = static_cast<std::uint64_t>(size);
          s.strategy = strat;
          s.seed = o.seeds[si];
          s.max_rounds = o.max_rounds;
          s.approach = o.approach;
          out.push_back(std::move(s));
        }
      }
    }
  }
  return out;
}

/// Runs every scenario, audited, spread over worker threads; each run stays sequential and
/// the report order is the scenario order.
inline SweepReport run_sweep(const std::vector<Scenario>& scenarios, std::string title, unsigned threads = 0) {
  SweepReport report;
  report.title = std::move(title);
  report.entries.resize(scenarios.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, scenarios.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < scenarios.size(); i = next++) {
      Outcome o;
      try {
        o = run_scenario(scenarios[i], false).outcome;
      } catch (const Error& e) {
        o = Outcome::error(0, e.what());
      }
      report.entries[i] = {scenarios[i].name, o};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  for (const auto& e : report.entries) {
    switch (e.outcome.kind) {
      case Outcome::Kind::Gathered:
        ++report.gathered;
        report.gather_rounds.push_back(e.outcome.round);
        break;
      case Outcome::Kind::BudgetExhausted: ++report.budget_exhausted; break;
      case Outcome::Kind::FalseDetection: ++report.false_detection; break;
      case Outcome::Kind::Error: ++report.violations; break;
    }
  }
  std::sort(report.gather_rounds.begin(), report.gather_rounds.end());
  return report;
}

inline SweepReport sweep(const SweepOptions& o) {
  std::string title = "sweep machine=" + std::string(machine_name(o.machine)) + " sizes=";
  for (std::size_t i = 0; i < o.sizes.size(); ++i) title += (i ? "," : "") + std::to_string(o.sizes[i]);
  title += " strategies=";
  for (std::size_t i = 0; i < o.strategies.size(); ++i) title += (i ? ";" : "") + describe(o.strategies[i]);
  title += " seeds=" + std::to_string(o.seeds.size()) + " max-rounds=" + std::to_string(o.max_rounds);
  if (o.machine == MachineKind::General)
    title += " approach=" + std::string(approach_name(o.approach)) + " max-distance=" + std::to_string(o.max_distance);
  return run_sweep(sweep_scenarios(o), std::move(title), o.threads);
}

// ---------------------------------------------------------------------------
// Enumeration and the corner lemma

inline std::string enumeration_report(const std::vector<int>& sizes, bool contractible_only, bool list) {
  std::string out;
  for (int n : sizes) {
    auto all = enumerate_polyominoes(n, contractible_only);
    out += "size " + std::to_string(n) + ": " + std::to_string(all.size()) + "\n";
    if (!list) continue;
    for (const auto& cfg : all) {
      std::string line;
      for (const auto& c : cfg.cells()) line += (line.empty() ? "" : " ") + to_string(c);
      out += "  " + line + "\n";
    }
  }
  return out;
}

struct LemmaReport {
  int max_size = 0;
  std::size_t checked = 0;
  std::vector<Configuration> counterexamples;

  std::string to_text() const {
    std::string out = "verify-lemma max-size " + std::to_string(max_size) + ": checked " + std::to_string(checked) +
                      " contractible polyominoes, " + std::to_string(counterexamples.size()) + " counterexamples\n";
    for (const auto& cfg : counterexamples) {
      out += "counterexample:";
      for (const auto& c : cfg.cells()) out += " " + to_string(c);
      out += "\n";
    }
    return out;
  }
};

/// Every contractible polyomino of size 2..max_size has a leaf or a destructible corner.
inline LemmaReport verify_lemma(int max_size) {
  if (max_size > enumeration_limit())
    throw Error("max size " + std::to_string(max_size) + " above the enumeration limit " +
                std::to_string(enumeration_limit()));
  LemmaReport r;
  r.max_size = max_size;
  for (int n = 2; n <= max_size; ++n) {
    for (const auto& cfg : enumerate_polyominoes(n, true)) {
      ++r.checked;
      if (!lemma_geo_holds(cfg)) r.counterexamples.push_back(cfg);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Demonstrators

struct DemoReport {
  bool passed = false;
  std::string text;
};

/// Two copies of a deterministic machine at distance d under Lockstep never change their
/// distance: they see identical neighborhoods and take identical steps.
inline DemoReport demo_lockstep(MachineKind machine, std::int64_t d, Round rounds) {
  if (machine == MachineKind::General) throw Error("the lockstep argument applies to deterministic machines only");
  if (d <= 1) throw Error("distance must be larger than 1");
  if (rounds < 1) throw Error("rounds must be at least 1");
  Configuration cfg;
  cfg.add({0, 0});
  cfg.add({d, 0});
  Scenario s;
  s.machine = machine;
  s.configuration = cfg;
  std::optional<std::string> failure;
  Round checked = 0;
  auto outcome = with_machine(s, [&](const auto& m, auto) {
    using M = std::decay_t<decltype(m)>;
    RunOptions<M> opt;
    opt.record_trace = false;
    opt.stop_at_verdict = false;
    opt.on_round_end = [&](const World<M>& w, Round r) {
      ++checked;
      const auto& a = w.agents();
      const auto dist = distance(a[0].cell, a[1].cell);
      if (dist != d && !failure)
        failure = "round " + std::to_string(r) + ": distance " + std::to_string(dist);
    };
    return run(m, cfg, std::nullopt, SchedulerStrategy{Lockstep{}}, 1, rounds, opt).outcome;
  });
  DemoReport rep;
  rep.passed = !failure && checked == rounds;
  rep.text = "demo-lockstep machine=" + std::string(machine_name(machine)) + " d=" + std::to_string(d) +
             " rounds=" + std::to_string(rounds) + ": " +
             (rep.passed ? "distance " + std::to_string(d) + " at every round" : "FAIL " + failure.value_or("run cut short")) +
             " (verdict " + outcome.to_string() + ")\n";
  return rep;
}

struct FreezeReport {
  std::size_t runs = 0, gathered = 0, false_detection = 0, budget_exhausted = 0, errors = 0;
  std::string text;
};

/// Agents at (0,0), (0,2), (0,t+3); the third stays frozen until round t while the other two
/// run in lockstep. The general machine gets `n` as input.
inline FreezeReport demo_freeze(Round t, const std::vector<std::uint64_t>& seeds, std::uint64_t n,
                                ApproachKind approach = ApproachKind::LazyRandomWalk, Round max_rounds = 100000) {
  if (t < 1) throw Error("t must be at least 1");
  Configuration cfg;
  cfg.add({0, 0});
  cfg.add({0, 2});
  cfg.add({0, t + 3});
  const AgentId far = 2;  // ids follow the sorted cell order
  FreezeReport rep;
  std::string lines;
  for (auto seed : seeds) {
    RunOptions<GeneralMachine> opt;
    opt.record_trace = false;
    if (n == cfg.agent_count()) opt.auditors = general_auditors();
    auto strategy = freeze_subset_strategy({far}, t, SchedulerStrategy{Lockstep{}});
    auto res = run(GeneralMachine(approach), cfg, encode_count(n), strategy, seed, max_rounds, opt);
    ++rep.runs;
    switch (res.outcome.kind) {
      case Outcome::Kind::Gathered: ++rep.gathered; break;
      case Outcome::Kind::FalseDetection: ++rep.false_detection; break;
      case Outcome::Kind::BudgetExhausted: ++rep.budget_exhausted; break;
      case Outcome::Kind::Error: ++rep.errors; break;
    }
    lines += "  seed " + std::to_string(seed) + ": " + res.outcome.to_string() + "\n";
  }
  rep.text = "demo-freeze t=" + std::to_string(t) + " n=" + std::to_string(n) + " approach=" +
             std::string(approach_name(approach)) + ": runs " + std::to_string(rep.runs) + ", gathered " +
             std::to_string(rep.gathered) + ", false-detection " + std::to_string(rep.false_detection) +
             ", budget-exhausted " + std::to_string(rep.budget_exhausted) + ", errors " + std::to_string(rep.errors) +
             "\n" + lines;
  return rep;
}

}  // namespace gridgather

#endif  // GRIDGATHER_HARNESS_HPP
