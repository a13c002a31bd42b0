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

#ifndef GRIDGATHER_MACHINE_HPP
#define GRIDGATHER_MACHINE_HPP

#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridgather/grid.hpp"

namespace gridgather {

enum class Move : std::uint8_t { N = 0, E = 1, S = 2, W = 3, P = 4 };

constexpr Move move_of(Dir d) { return static_cast<Move>(static_cast<int>(d)); }

constexpr Cell apply(const Cell& c, Move m) {
  return m == Move::P ? c : c + offset(static_cast<Dir>(static_cast<int>(m)));
}

constexpr char letter(Move m) { return "NESWP"[static_cast<int>(m)]; }

/// Slots of an observation: own cell first, then N, E, S, W.
enum class Slot : std::uint8_t { P = 0, N = 1, E = 2, S = 3, W = 4 };

constexpr Slot slot_of(Dir d) { return static_cast<Slot>(static_cast<int>(d) + 1); }

template <typename State>
struct ObservedGroup {
  int count = 0;
  State state;

  friend bool operator==(const ObservedGroup&, const ObservedGroup&) = default;
};

/// Five multisets of visible states. Each distinct state appears once with its count,
/// sorted by the state's total order. The observing agent is excluded from its own cell.
template <typename State>
struct Observation {
  std::array<std::vector<ObservedGroup<State>>, 5> slots;

  const std::vector<ObservedGroup<State>>& at(Slot s) const { return slots[static_cast<int>(s)]; }
  const std::vector<ObservedGroup<State>>& at(Dir d) const { return at(slot_of(d)); }
  std::vector<ObservedGroup<State>>& at(Slot s) { return slots[static_cast<int>(s)]; }
  std::vector<ObservedGroup<State>>& at(Dir d) { return at(slot_of(d)); }

  bool occupied(Dir d) const { return !at(d).empty(); }

  /// Bitmask of occupied neighbor cells (bit i for kDirs[i]).
  unsigned neighbor_mask() const {
    unsigned m = 0;
    for (int i = 0; i < 4; ++i)
      if (!slots[i + 1].empty()) m |= 1u << i;
    return m;
  }

  bool neighborhood_empty() const { return neighbor_mask() == 0; }

  int agents_at(Slot s) const {
    int n = 0;
    for (const auto& g : at(s)) n += g.count;
    return n;
  }

  template <typename Pred>
  bool any_at(Slot s, Pred&& pred) const {
    for (const auto& g : at(s))
      if (pred(g.state)) return true;
    return false;
  }

  template <typename Pred>
  bool all_at(Slot s, Pred&& pred) const {
    for (const auto& g : at(s))
      if (!pred(g.state)) return false;
    return true;
  }

  /// Adds one agent in the given state, keeping the multiset canonical.
  void add(Slot s, const State& q, int count = 1) {
    auto& v = at(s);
    auto it = v.begin();
    while (it != v.end() && it->state < q) ++it;
    if (it != v.end() && it->state == q) {
      it->count += count;
    } else {
      v.insert(it, ObservedGroup<State>{count, q});
    }
  }

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// The contract every agent machine satisfies. States are value types with a total order;
/// the order only serves to make observations and traces deterministic.
template <typename M>
concept MachineSpec = requires(const M& m, const typename M::State& q, const Observation<typename M::State>& obs,
                               std::optional<bool> bit, std::optional<std::string> input) {
  requires std::totally_ordered<typename M::State>;
  { M::kName } -> std::convertible_to<std::string_view>;
  { M::kRandomized } -> std::convertible_to<bool>;
  { M::kFiniteState } -> std::convertible_to<bool>;
  { M::kHasInput } -> std::convertible_to<bool>;
  { m.initial(input) } -> std::same_as<typename M::State>;
  { m.transition(q, obs, bit) } -> std::same_as<typename M::State>;
  { m.action(q) } -> std::same_as<Move>;
  { m.is_final(q) } -> std::same_as<bool>;
  { m.serialize(q) } -> std::convertible_to<std::string>;
};

/// Big-endian binary encoding of a positive count, no leading zeros.
inline std::string encode_count(std::uint64_t n) {
  if (n == 0) throw Error("count must be positive");
  std::string bits;
  while (n) {
    bits.insert(bits.begin(), static_cast<char>('0' + (n & 1)));
    n >>= 1;
  }
  return bits;
}

inline std::uint64_t decode_count(std::string_view bits) {
  if (bits.empty()) throw Error("empty input string");
  if (bits.front() == '0') throw Error("input has leading zeros or encodes zero");
  if (bits.size() > 63) throw Error("input too long");
  std::uint64_t n = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error("input is not a binary string");
    n = (n << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return n;
}

template <MachineSpec M>
typename M::State initial_state_of(const M& machine, const std::optional<std::string>& input) {
  if (input && !M::kHasInput) throw Error(std::string(M::kName) + " machine takes no initial input");
  return machine.initial(input);
}

/// One look: returns the next state and the move it implies. The final state absorbs.
template <MachineSpec M>
std::pair<typename M::State, Move> step(const M& machine, const typename M::State& q,
                                        const Observation<typename M::State>& obs, std::optional<bool> bit) {
  if (bit.has_value() != M::kRandomized)
    throw Error(M::kRandomized ? "randomized machine needs a random bit" : "deterministic machine takes no random bit");
  if (machine.is_final(q)) return {q, Move::P};
  auto next = machine.transition(q, obs, bit);
  auto mv = machine.action(next);
  return {std::move(next), mv};
}

/// Anything that can report the agents standing on a cell.
template <typename W, typename State>
concept WorldView = requires(const W& w, const Cell& c) {
  { w.states_at(c) } -> std::convertible_to<std::vector<State>>;
};

/// Builds the observation of an agent in state self_state standing on c. One agent with
/// self_state is removed from the own-cell multiset.
template <typename State, typename World>
Observation<State> observe(const World& world, const Cell& c, const State& self_state) {
  Observation<State> obs;
  std::vector<State> own = world.states_at(c);
  bool removed = false;
  for (const auto& q : own) {
    if (!removed && q == self_state) {
      removed = true;
      continue;
    }
    obs.add(Slot::P, q);
  }
  if (!removed) throw Error("no agent in the given state at " + to_string(c));
  for (Dir d : kDirs) {
    for (const auto& q : world.states_at(c + offset(d))) obs.add(slot_of(d), q);
  }
  return obs;
}

/// 64-bit FNV-1a, used for trace digests.
inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 15];
  return out;
}

template <MachineSpec M>
std::string serialize_observation(const M& machine, const Observation<typename M::State>& obs) {
  static constexpr const char* names[] = {"P", "N", "E", "S", "W"};
  std::string out;
  for (int s = 0; s < 5; ++s) {
    out += names[s];
    out += '[';
    bool first = true;
    for (const auto& g : obs.slots[s]) {
      if (!first) out += ';';
      first = false;
      out += std::to_string(g.count);
      out += '*';
      out += machine.serialize(g.state);
    }
    out += ']';
  }
  return out;
}

}  // namespace gridgather

#endif  // GRIDGATHER_MACHINE_HPP
