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

#ifndef GRIDGATHER_CONTRACTIBLE_HPP
#define GRIDGATHER_CONTRACTIBLE_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridgather/engine.hpp"
#include "gridgather/grid.hpp"
#include "gridgather/machine.hpp"

namespace gridgather {

enum class CCState : std::uint8_t {
  Idle,
  LeafAsking,
  LeafAgree,
  MoveNorth,
  MoveEast,
  MoveSouth,
  MoveWest,
  NEQuestion,
  NEAgree,
  NWQuestion,
  NWAgree,
  Final,
};

inline constexpr std::array<std::string_view, 12> kCCStateNames = {
    "idle",        "leaf-asking", "leaf-agree", "move-North", "move-East", "move-South",
    "move-West",   "NE-question", "NE-agree",   "NW-question", "NW-agree", "ω",
};

inline std::string_view name_of(CCState q) { return kCCStateNames[static_cast<std::size_t>(q)]; }

inline std::optional<CCState> cc_state_from_name(std::string_view s) {
  for (std::size_t i = 0; i < kCCStateNames.size(); ++i)
    if (kCCStateNames[i] == s) return static_cast<CCState>(i);
  return std::nullopt;
}

/// Deterministic finite automaton without input that gathers every connected contractible
/// configuration by repeatedly removing leaves and NE/NW corners of 2x2 blocks.
class ContractibleMachine {
 public:
  using State = CCState;
  static constexpr std::string_view kName = "contractible";
  static constexpr bool kRandomized = false;
  static constexpr bool kFiniteState = true;
  static constexpr bool kHasInput = false;
  static constexpr std::size_t kStateCount = kCCStateNames.size();

  State initial(const std::optional<std::string>&) const { return State::Idle; }

  State transition(State q, const Observation<State>& obs, std::optional<bool>) const {
    using enum CCState;
    if (q == Final) return Final;
    const unsigned mask = obs.neighbor_mask();
    if (mask == 0) return Final;

    auto is = [](State want) { return [want](State s) { return s == want; }; };
    const bool agreeing = q == LeafAgree || q == NEAgree || q == NWAgree;

    if (obs.any_at(Slot::S, is(LeafAsking)) || obs.any_at(Slot::W, is(LeafAsking))) return LeafAgree;

    switch (leaf_kind(mask)) {
      case LeafKind::N: return agreeing ? Idle : MoveSouth;
      case LeafKind::E: return agreeing ? Idle : MoveWest;
      case LeafKind::S:
        return q == LeafAsking && obs.all_at(Slot::N, is(LeafAgree)) ? MoveNorth : LeafAsking;
      case LeafKind::W:
        return q == LeafAsking && obs.all_at(Slot::E, is(LeafAgree)) ? MoveEast : LeafAsking;
      case LeafKind::None: break;
    }

    switch (corner_kind(mask)) {
      case CornerKind::NE: return q == NEQuestion && obs.any_at(Slot::S, is(NEAgree)) ? MoveSouth : NEQuestion;
      case CornerKind::NW: return q == NWQuestion && obs.any_at(Slot::S, is(NWAgree)) ? MoveSouth : NWQuestion;
      case CornerKind::None: break;
    }

    if (obs.any_at(Slot::N, is(NEQuestion)) && obs.occupied(Dir::W)) return NEAgree;
    if (obs.any_at(Slot::N, is(NWQuestion)) && obs.occupied(Dir::E)) return NWAgree;
    return Idle;
  }

  Move action(State q) const {
    switch (q) {
      case State::MoveNorth: return Move::N;
      case State::MoveEast: return Move::E;
      case State::MoveSouth: return Move::S;
      case State::MoveWest: return Move::W;
      default: return Move::P;
    }
  }

  bool is_final(State q) const { return q == State::Final; }
  std::string serialize(State q) const { return std::string(name_of(q)); }
};

inline ContractibleMachine cc_machine() { return {}; }

// ---------------------------------------------------------------------------
// Runtime checks for machines that only ever shrink the occupied set.

/// Every move lands on a cell that was occupied when the round began.
template <MachineSpec M>
Auditor<M> audit_shrinking() {
  return [](const World<M>&, const RoundInfo<M>& info) -> std::optional<std::string> {
    for (const auto& c : info.commits) {
      if (c.from != c.to && !info.before->contains(c.to))
        return "agent " + std::to_string(c.agent) + " moved to unoccupied cell " + to_string(c.to);
    }
    return std::nullopt;
  };
}

/// No cell that was empty at the start of a round is occupied at its end.
template <MachineSpec M>
Auditor<M> audit_monotone() {
  return [](const World<M>& world, const RoundInfo<M>& info) -> std::optional<std::string> {
    for (const auto& c : info.commits)
      if (!world.ids_at(c.to).empty() && !info.before->contains(c.to))
        return "cell " + to_string(c.to) + " became occupied";
    return std::nullopt;
  };
}

/// The occupied set stays connected and contractible.
template <MachineSpec M>
Auditor<M> audit_contractible() {
  return [](const World<M>& world, const RoundInfo<M>& info) -> std::optional<std::string> {
    bool moved = false;
    for (const auto& c : info.commits) moved |= c.from != c.to;
    if (!moved) return std::nullopt;
    auto occ = world.occupancy();
    if (!is_connected(occ)) return "configuration disconnected";
    if (!is_contractible(occ)) return "configuration no longer contractible";
    return std::nullopt;
  };
}

/// Two agents trading places between neighboring cells in one round is a swap; the same
/// ordered pair of cells may host at most one.
template <MachineSpec M>
Auditor<M> audit_swaps() {
  auto seen = std::make_shared<std::set<std::pair<Cell, Cell>>>();
  return [seen](const World<M>&, const RoundInfo<M>& info) -> std::optional<std::string> {
    std::set<std::pair<Cell, Cell>> moves;
    for (const auto& c : info.commits)
      if (c.from != c.to) moves.emplace(c.from, c.to);
    for (const auto& [a, b] : moves) {
      if (!(a < b) || !moves.count({b, a})) continue;
      if (!seen->emplace(a, b).second) return "second swap between " + to_string(a) + " and " + to_string(b);
    }
    return std::nullopt;
  };
}

inline std::vector<Auditor<ContractibleMachine>> contractible_auditors() {
  return {audit_shrinking<ContractibleMachine>(), audit_monotone<ContractibleMachine>(),
          audit_contractible<ContractibleMachine>(), audit_swaps<ContractibleMachine>()};
}

}  // namespace gridgather

#endif  // GRIDGATHER_CONTRACTIBLE_HPP
