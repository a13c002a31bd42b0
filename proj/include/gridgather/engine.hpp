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

#ifndef GRIDGATHER_ENGINE_HPP
#define GRIDGATHER_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gridgather/grid.hpp"
#include "gridgather/machine.hpp"

namespace gridgather {

using Round = std::int64_t;
using AgentId = std::size_t;

// ---------------------------------------------------------------------------
// Scheduling strategies

enum class Action : std::uint8_t { None, Look, Commit };

/// Every idle agent looks in round r and commits in round r+1.
struct Lockstep {};

/// Each round an idle agent looks with probability p_look and a pending agent commits with
/// probability p_commit; either is forced once the agent has waited `cap` rounds.
struct RandomFair {
  double p_look = 0.5;
  double p_commit = 0.5;
  int cap = 8;
};

struct ScriptedEvent {
  Round round = 0;
  AgentId agent = 0;
  Action action = Action::None;
};

/// A fixed list of events, usually recovered from a trace. Not fair in general.
struct Scripted {
  std::vector<ScriptedEvent> events;
};

struct SchedulerStrategy;

/// Agents in `frozen` receive nothing before `thaw_round`; everything else follows `inner`.
struct FreezeSubset {
  std::set<AgentId> frozen;
  Round thaw_round = 1;
  std::shared_ptr<const SchedulerStrategy> inner;
};

struct SchedulerStrategy {
  std::variant<Lockstep, RandomFair, Scripted, FreezeSubset> kind = Lockstep{};
};

inline SchedulerStrategy freeze_subset_strategy(std::set<AgentId> frozen, Round thaw_round, SchedulerStrategy inner) {
  if (thaw_round < 1) throw Error("thaw round must be at least 1");
  return {FreezeSubset{std::move(frozen), thaw_round, std::make_shared<const SchedulerStrategy>(std::move(inner))}};
}

inline std::string describe(const SchedulerStrategy& s) {
  struct V {
    std::string operator()(const Lockstep&) const { return "lockstep"; }
    std::string operator()(const RandomFair& f) const {
      std::ostringstream os;
      os << "random-fair " << f.p_look << ' ' << f.p_commit << ' ' << f.cap;
      return os.str();
    }
    std::string operator()(const Scripted& s) const { return "scripted " + std::to_string(s.events.size()); }
    std::string operator()(const FreezeSubset& f) const {
      std::string out = "freeze " + std::to_string(f.thaw_round) + " [";
      bool first = true;
      for (auto id : f.frozen) {
        if (!first) out += ',';
        first = false;
        out += std::to_string(id);
      }
      return out + "] " + describe(*f.inner);
    }
  };
  return std::visit(V{}, s.kind);
}

/// Rounds within which a fair strategy guarantees a full look/commit pair to every
/// non-final agent, or nullopt for strategies without such a bound.
inline std::optional<Round> fairness_window(const SchedulerStrategy& s) {
  struct V {
    std::optional<Round> operator()(const Lockstep&) const { return 2; }
    std::optional<Round> operator()(const RandomFair& f) const { return 2 * static_cast<Round>(f.cap) + 2; }
    std::optional<Round> operator()(const Scripted&) const { return std::nullopt; }
    std::optional<Round> operator()(const FreezeSubset& f) const { return fairness_window(*f.inner); }
  };
  return std::visit(V{}, s.kind);
}

/// Seeded stream shared by scheduler draws and random bits, in event order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  bool bernoulli(double p) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return u < p;
  }
  bool bit() { return (gen_() >> 63) != 0; }
  std::uint64_t next() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

/// What a scheduler may know about an agent: never its state, only its activation status.
struct AgentView {
  bool final = false;
  bool pending = false;
  Round look_round = 0;     // round of the outstanding look, if pending
  Round last_change = 0;    // round of the last look or commit
};

class Scheduler {
 public:
  explicit Scheduler(const SchedulerStrategy& strategy) : strategy_(strategy) {
    if (auto* f = std::get_if<FreezeSubset>(&strategy_.kind)) {
      if (!f->inner) throw Error("freeze strategy without inner strategy");
      inner_ = std::make_unique<Scheduler>(*f->inner);
    }
    if (auto* s = std::get_if<Scripted>(&strategy_.kind)) {
      for (const auto& e : s->events) script_[e.round].push_back(e);
    }
  }

  std::vector<Action> decide(Round round, std::span<const AgentView> agents, Rng& rng) {
    std::vector<Action> out(agents.size(), Action::None);
    if (std::holds_alternative<Lockstep>(strategy_.kind)) {
      for (std::size_t i = 0; i < agents.size(); ++i) {
        const auto& a = agents[i];
        if (a.pending) {
          if (a.look_round < round) out[i] = Action::Commit;
        } else if (!a.final) {
          out[i] = Action::Look;
        }
      }
    } else if (auto* f = std::get_if<RandomFair>(&strategy_.kind)) {
      for (std::size_t i = 0; i < agents.size(); ++i) {
        const auto& a = agents[i];
        if (a.pending) {
          if (a.look_round >= round) continue;
          bool go = rng.bernoulli(f->p_commit) || round - a.look_round >= f->cap;
          if (go) out[i] = Action::Commit;
        } else if (!a.final) {
          bool go = rng.bernoulli(f->p_look) || round - a.last_change >= f->cap;
          if (go) out[i] = Action::Look;
        }
      }
    } else if (std::holds_alternative<Scripted>(strategy_.kind)) {
      if (auto it = script_.find(round); it != script_.end()) {
        for (const auto& e : it->second) {
          if (e.agent >= agents.size()) throw Error("scripted event names unknown agent " + std::to_string(e.agent));
          if (out[e.agent] != Action::None) throw Error("scripted strategy gives agent two events in one round");
          out[e.agent] = e.action;
        }
      }
    } else {
      const auto& f = std::get<FreezeSubset>(strategy_.kind);
      out = inner_->decide(round, agents, rng);
      if (round < f.thaw_round)
        for (auto id : f.frozen)
          if (id < out.size()) out[id] = Action::None;
    }
    return out;
  }

 private:
  SchedulerStrategy strategy_;
  std::unique_ptr<Scheduler> inner_;
  std::map<Round, std::vector<ScriptedEvent>> script_;
};

// ---------------------------------------------------------------------------
// Outcomes and traces

struct Outcome {
  enum class Kind : std::uint8_t { Gathered, FalseDetection, BudgetExhausted, Error };
  Kind kind = Kind::BudgetExhausted;
  Round round = 0;
  Cell cell{};               // Gathered: meeting cell. FalseDetection: cell of the detecting agent.
  AgentId agent = 0;         // FalseDetection: detecting agent
  AgentId witness = 0;       // FalseDetection: an agent elsewhere
  Cell witness_cell{};
  std::string description;   // Error

  static Outcome gathered(Round r, Cell c) { return {Kind::Gathered, r, c, 0, 0, {}, {}}; }
  static Outcome false_detection(Round r, AgentId a, Cell c, AgentId w, Cell wc) {
    return {Kind::FalseDetection, r, c, a, w, wc, {}};
  }
  static Outcome budget_exhausted(Round r) { return {Kind::BudgetExhausted, r, {}, 0, 0, {}, {}}; }
  static Outcome error(Round r, std::string what) { return {Kind::Error, r, {}, 0, 0, {}, std::move(what)}; }

  bool is(Kind k) const { return kind == k; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Gathered: return "Gathered " + std::to_string(round) + " " + gridgather::to_string(cell);
      case Kind::FalseDetection:
        return "FalseDetection " + std::to_string(round) + " " + std::to_string(agent) + " " + gridgather::to_string(cell) +
               " " + std::to_string(witness) + " " + gridgather::to_string(witness_cell);
      case Kind::BudgetExhausted: return "BudgetExhausted " + std::to_string(round);
      case Kind::Error: return "Error " + std::to_string(round) + " " + description;
    }
    return {};
  }

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

enum class EventKind : std::uint8_t { Look, Bit, Commit };

struct TraceEvent {
  Round round = 0;
  AgentId agent = 0;
  EventKind kind = EventKind::Look;
  std::string detail;

  std::string to_line() const {
    static constexpr const char* names[] = {"LOOK", "BIT", "COMMIT"};
    return std::to_string(round) + " " + std::to_string(agent) + " " + names[static_cast<int>(kind)] + " " + detail;
  }

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct Trace {
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<TraceEvent> events;
  Outcome verdict;

  std::optional<std::string> header_value(const std::string& key) const {
    for (const auto& [k, v] : header)
      if (k == key) return v;
    return std::nullopt;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& [k, v] : header) out += "#! " + k + " " + v + "\n";
    for (const auto& e : events) out += e.to_line() + "\n";
    out += "#verdict " + verdict.to_string() + "\n";
    return out;
  }

  static Trace parse(std::istream& in);
  static Trace parse(const std::string& text) {
    std::istringstream ss(text);
    return parse(ss);
  }
};

inline Cell parse_cell_token(const std::string& tok) {
  auto comma = tok.find(',');
  if (comma == std::string::npos) throw Error("bad cell '" + tok + "'");
  try {
    return {std::stoll(tok.substr(0, comma)), std::stoll(tok.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error("bad cell '" + tok + "'");
  }
}

inline Outcome parse_outcome(const std::string& text) {
  std::istringstream ss(text);
  std::string kind;
  Round r = 0;
  ss >> kind >> r;
  if (!ss) throw Error("bad verdict '" + text + "'");
  if (kind == "Gathered") {
    std::string c;
    ss >> c;
    return Outcome::gathered(r, parse_cell_token(c));
  }
  if (kind == "FalseDetection") {
    AgentId a, w;
    std::string c, wc;
    ss >> a >> c >> w >> wc;
    if (!ss) throw Error("bad verdict '" + text + "'");
    return Outcome::false_detection(r, a, parse_cell_token(c), w, parse_cell_token(wc));
  }
  if (kind == "BudgetExhausted") return Outcome::budget_exhausted(r);
  if (kind == "Error") {
    std::string rest;
    std::getline(ss, rest);
    if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
    return Outcome::error(r, rest);
  }
  throw Error("unknown verdict kind '" + kind + "'");
}

inline Trace Trace::parse(std::istream& in) {
  Trace t;
  std::string line;
  int lineno = 0;
  bool have_verdict = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line.rfind("#! ", 0) == 0) {
      auto rest = line.substr(3);
      auto sp = rest.find(' ');
      if (sp == std::string::npos) t.header.emplace_back(rest, "");
      else t.header.emplace_back(rest.substr(0, sp), rest.substr(sp + 1));
      continue;
    }
    if (line.rfind("#verdict ", 0) == 0) {
      t.verdict = parse_outcome(line.substr(9));
      have_verdict = true;
      continue;
    }
    if (line.front() == '#') continue;
    std::istringstream ss(line);
    TraceEvent e;
    std::string kind;
    if (!(ss >> e.round >> e.agent >> kind)) throw Error("trace line " + std::to_string(lineno) + ": malformed event");
    if (kind == "LOOK") e.kind = EventKind::Look;
    else if (kind == "BIT") e.kind = EventKind::Bit;
    else if (kind == "COMMIT") e.kind = EventKind::Commit;
    else throw Error("trace line " + std::to_string(lineno) + ": unknown event '" + kind + "'");
    std::getline(ss, e.detail);
    if (!e.detail.empty() && e.detail.front() == ' ') e.detail.erase(0, 1);
    t.events.push_back(std::move(e));
  }
  if (!have_verdict) throw Error("trace has no verdict line");
  return t;
}

// ---------------------------------------------------------------------------
// World

template <MachineSpec M>
struct AgentRuntime {
  using State = typename M::State;
  AgentId id = 0;
  Cell start{};
  Cell cell{};
  State state{};
  bool pending = false;
  State next_state{};
  Move next_move = Move::P;
  Round look_round = 0;
  Round last_change = 0;
};

/// Agents and their positions. During the look phase of a round it is the frozen snapshot
/// all looks read; commits are applied together at the end of the round.
template <MachineSpec M>
class World {
 public:
  using State = typename M::State;

  World(const M& machine, const Configuration& cfg, const std::optional<std::string>& input) : machine_(&machine) {
    if (cfg.empty()) throw Error("empty configuration");
    if (!cfg.is_initial()) throw Error("initial configuration must have one agent per cell");
    State q0 = initial_state_of(machine, input);
    for (const auto& c : cfg.cells()) {
      AgentRuntime<M> a;
      a.id = agents_.size();
      a.start = a.cell = c;
      a.state = q0;
      agents_.push_back(std::move(a));
    }
    reindex();
  }

  const M& machine() const { return *machine_; }
  const std::vector<AgentRuntime<M>>& agents() const { return agents_; }
  std::vector<AgentRuntime<M>>& agents() { return agents_; }

  std::vector<State> states_at(const Cell& c) const {
    std::vector<State> out;
    if (auto it = by_cell_.find(c); it != by_cell_.end())
      for (auto id : it->second) out.push_back(agents_[id].state);
    return out;
  }

  const std::vector<AgentId>& ids_at(const Cell& c) const {
    static const std::vector<AgentId> none;
    auto it = by_cell_.find(c);
    return it == by_cell_.end() ? none : it->second;
  }

  Observation<State> observation_of(AgentId id) const {
    const auto& self = agents_[id];
    Observation<State> obs;
    for (auto other : ids_at(self.cell))
      if (other != id) obs.add(Slot::P, agents_[other].state);
    for (Dir d : kDirs)
      for (auto other : ids_at(self.cell + offset(d))) obs.add(slot_of(d), agents_[other].state);
    return obs;
  }

  Configuration occupancy() const {
    Configuration cfg;
    for (const auto& [c, ids] : by_cell_) cfg.add(c, static_cast<int>(ids.size()));
    return cfg;
  }

  std::size_t occupied_cells() const { return by_cell_.size(); }

  void reindex() {
    by_cell_.clear();
    for (const auto& a : agents_) by_cell_[a.cell].push_back(a.id);
  }

 private:
  const M* machine_;
  std::vector<AgentRuntime<M>> agents_;
  std::map<Cell, std::vector<AgentId>> by_cell_;
};

/// Outcome after a round in which `entered_final` agents transited to the final state, or
/// nullopt while the run is still going.
template <MachineSpec M>
std::optional<Outcome> check_outcome(const World<M>& world, std::span<const AgentId> entered_final, Round round) {
  const auto& agents = world.agents();
  for (auto id : entered_final) {
    for (const auto& other : agents) {
      if (other.cell != agents[id].cell) return Outcome::false_detection(round, id, agents[id].cell, other.id, other.cell);
    }
  }
  if (world.occupied_cells() != 1) return std::nullopt;
  for (const auto& a : agents)
    if (!world.machine().is_final(a.state)) return std::nullopt;
  return Outcome::gathered(round, agents.front().cell);
}

struct CommitRecord {
  AgentId agent = 0;
  Cell from{};
  Cell to{};
};

template <MachineSpec M>
struct RoundInfo {
  Round round = 0;
  const Configuration* before = nullptr;  // occupancy at the start of the round
  std::vector<CommitRecord> commits;
};

/// Invariant checker run after every round; returns a description on violation.
template <MachineSpec M>
using Auditor = std::function<std::optional<std::string>(const World<M>&, const RoundInfo<M>&)>;

template <MachineSpec M>
struct RunOptions {
  bool record_trace = true;
  bool stop_at_verdict = true;
  std::vector<Auditor<M>> auditors;
  std::function<void(const World<M>&, Round)> on_round_end;
  std::optional<std::vector<bool>> scripted_bits;  // replay: bits to use instead of the stream
};

template <MachineSpec M>
struct RunResult {
  Trace trace;
  Outcome outcome;
  std::vector<Cell> final_cells;
  std::vector<typename M::State> final_states;
};

inline std::string scenario_digest(std::string_view machine_name, const Configuration& cfg,
                                   const std::optional<std::string>& input) {
  std::string text = std::string(machine_name) + "\n" + (input ? *input : std::string("-")) + "\n" + format_cells(cfg);
  return hex64(fnv1a(text));
}

template <MachineSpec M>
RunResult<M> run(const M& machine, const Configuration& cfg, const std::optional<std::string>& input,
                 const SchedulerStrategy& strategy, std::uint64_t seed, Round max_rounds,
                 const RunOptions<M>& options = {}) {
  if (max_rounds < 1) throw Error("max_rounds must be at least 1");
  RunResult<M> result;
  auto& trace = result.trace;
  trace.header = {{"gridgather-trace", "1"},
                  {"machine", std::string(M::kName)},
                  {"scenario", scenario_digest(M::kName, cfg, input)},
                  {"seed", std::to_string(seed)},
                  {"strategy", describe(strategy)},
                  {"max_rounds", std::to_string(max_rounds)}};

  World<M> world(machine, cfg, input);  // throws on an invalid configuration
  Scheduler scheduler(strategy);
  Rng rng(seed);
  std::size_t bit_pos = 0;
  std::optional<Outcome> verdict;
  const bool need_before = !options.auditors.empty();

  auto& agents = world.agents();
  std::vector<AgentView> views(agents.size());
  Configuration before;
  std::vector<AgentId> entered_final;

  for (Round r = 1; r <= max_rounds; ++r) {
    for (std::size_t i = 0; i < agents.size(); ++i) {
      const auto& a = agents[i];
      views[i] = {machine.is_final(a.state), a.pending, a.look_round, a.last_change};
    }
    std::vector<Action> actions;
    try {
      actions = scheduler.decide(r, views, rng);
    } catch (const Error& e) {
      verdict = Outcome::error(r, e.what());
      break;
    }
    std::optional<Outcome> misuse;
    for (std::size_t i = 0; i < agents.size() && !misuse; ++i) {
      if (actions[i] == Action::Look && agents[i].pending) {
        misuse = Outcome::error(r, "agent " + std::to_string(i) + " looks while a commit is outstanding");
      } else if (actions[i] == Action::Commit && (!agents[i].pending || agents[i].look_round >= r)) {
        misuse = Outcome::error(r, "agent " + std::to_string(i) + " commits without an earlier look");
      }
    }
    if (misuse) {
      verdict = misuse;
      break;
    }

    if (need_before) before = world.occupancy();

    // Looks: all read the world as it stood at the start of the round.
    std::vector<std::pair<AgentId, std::pair<typename M::State, Move>>> looked;
    std::optional<Outcome> fault;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      if (actions[i] != Action::Look) continue;
      auto obs = world.observation_of(i);
      std::optional<bool> bit;
      if constexpr (M::kRandomized) {
        if (options.scripted_bits) {
          if (bit_pos >= options.scripted_bits->size()) {
            fault = Outcome::error(r, "scripted random bits exhausted");
            break;
          }
          bit = (*options.scripted_bits)[bit_pos++];
        } else {
          bit = rng.bit();
        }
      }
      if (options.record_trace) {
        trace.events.push_back({r, i, EventKind::Look, hex64(fnv1a(serialize_observation(machine, obs)))});
        if (bit) trace.events.push_back({r, i, EventKind::Bit, *bit ? "1" : "0"});
      }
      try {
        looked.emplace_back(i, step(machine, agents[i].state, obs, bit));
      } catch (const Error& e) {
        fault = Outcome::error(r, e.what());
        break;
      }
    }
    if (fault) {
      verdict = fault;
      break;
    }
    for (auto& [i, res] : looked) {
      auto& a = agents[i];
      a.pending = true;
      a.next_state = std::move(res.first);
      a.next_move = res.second;
      a.look_round = r;
      a.last_change = r;
    }

    // Commits: applied together at the end of the round.
    RoundInfo<M> info;
    info.round = r;
    info.before = need_before ? &before : nullptr;
    entered_final.clear();
    bool any_commit = false;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      if (actions[i] != Action::Commit) continue;
      any_commit = true;
      auto& a = agents[i];
      const Cell from = a.cell;
      const Cell to = apply(from, a.next_move);
      const bool was_final = machine.is_final(a.state);
      if (options.record_trace) {
        trace.events.push_back({r, i, EventKind::Commit,
                                machine.serialize(a.state) + " " + machine.serialize(a.next_state) + " " +
                                    to_string(from) + " " + to_string(to)});
      }
      a.state = std::move(a.next_state);
      a.next_state = {};
      a.cell = to;
      a.pending = false;
      a.last_change = r;
      if (!was_final && machine.is_final(a.state)) entered_final.push_back(i);
      info.commits.push_back({i, from, to});
    }
    if (any_commit) world.reindex();

    for (const auto& audit : options.auditors) {
      if (auto violation = audit(world, info)) {
        if (!verdict) verdict = Outcome::error(r, "invariant violated: " + *violation);
      }
    }
    if (options.on_round_end) options.on_round_end(world, r);
    if (!verdict && any_commit) verdict = check_outcome(world, entered_final, r);
    if (verdict && options.stop_at_verdict) break;
    if (verdict && verdict->is(Outcome::Kind::Error)) break;
  }
  result.outcome = verdict ? *verdict : Outcome::budget_exhausted(max_rounds);
  trace.verdict = result.outcome;
  for (const auto& a : agents) {
    result.final_cells.push_back(a.cell);
    result.final_states.push_back(a.state);
  }
  return result;
}

/// Re-executes a recorded trace from its own scheduler decisions and random bits and checks
/// that every event and the verdict come out identical. Throws naming the first divergence.
template <MachineSpec M>
Trace replay(const Trace& recorded, const M& machine, const Configuration& cfg, const std::optional<std::string>& input) {
  auto digest = recorded.header_value("scenario");
  if (!digest || *digest != scenario_digest(M::kName, cfg, input))
    throw Error("trace header does not match the scenario");
  auto max_rounds_text = recorded.header_value("max_rounds");
  if (!max_rounds_text) throw Error("trace header lacks max_rounds");
  Round max_rounds = std::stoll(*max_rounds_text);
  std::uint64_t seed = 0;
  if (auto s = recorded.header_value("seed")) seed = std::stoull(*s);

  Scripted script;
  std::vector<bool> bits;
  for (const auto& e : recorded.events) {
    if (e.kind == EventKind::Look) script.events.push_back({e.round, e.agent, Action::Look});
    else if (e.kind == EventKind::Commit) script.events.push_back({e.round, e.agent, Action::Commit});
    else bits.push_back(e.detail == "1");
  }
  RunOptions<M> options;
  options.scripted_bits = std::move(bits);
  auto fresh = run(machine, cfg, input, SchedulerStrategy{script}, seed, max_rounds, options).trace;

  const std::size_t common = std::min(fresh.events.size(), recorded.events.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (!(fresh.events[i] == recorded.events[i]))
      throw Error("replay diverges at event " + std::to_string(i) + ": recorded '" + recorded.events[i].to_line() +
                  "', replayed '" + fresh.events[i].to_line() + "'");
  }
  if (fresh.events.size() != recorded.events.size())
    throw Error("replay diverges at event " + std::to_string(common) + ": event counts differ (" +
                std::to_string(recorded.events.size()) + " recorded, " + std::to_string(fresh.events.size()) + " replayed)");
  if (!(fresh.verdict == recorded.verdict))
    throw Error("replay verdict differs: recorded '" + recorded.verdict.to_string() + "', replayed '" +
                fresh.verdict.to_string() + "'");
  fresh.header = recorded.header;
  return fresh;
}

/// Checks a recorded trace for fairness: within every window of `window` rounds, each agent
/// that is not yet final completes a look followed by its commit.
inline std::optional<std::string> audit_fairness(const Trace& trace, std::size_t agent_count, Round window,
                                                 const std::function<bool(const std::string&)>& is_final_state) {
  std::vector<Round> last_commit(agent_count, 0);
  std::vector<bool> final(agent_count, false);
  Round end = trace.verdict.round;
  for (const auto& e : trace.events) {
    if (e.kind != EventKind::Commit) continue;
    if (e.agent >= agent_count) return "event for unknown agent";
    if (!final[e.agent] && e.round - last_commit[e.agent] > window)
      return "agent " + std::to_string(e.agent) + " idle from round " + std::to_string(last_commit[e.agent]) + " to " +
             std::to_string(e.round);
    last_commit[e.agent] = e.round;
    auto after = e.detail.substr(e.detail.find(' ') + 1);
    after = after.substr(0, after.find(' '));
    if (is_final_state(after)) final[e.agent] = true;
  }
  for (std::size_t i = 0; i < agent_count; ++i)
    if (!final[i] && end - last_commit[i] > window)
      return "agent " + std::to_string(i) + " never committed after round " + std::to_string(last_commit[i]);
  return std::nullopt;
}

}  // namespace gridgather

#endif  // GRIDGATHER_ENGINE_HPP
