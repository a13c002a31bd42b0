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

#ifndef GRIDGATHER_GENERAL_HPP
#define GRIDGATHER_GENERAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "gridgather/engine.hpp"
#include "gridgather/grid.hpp"
#include "gridgather/machine.hpp"

namespace gridgather {

// ---------------------------------------------------------------------------
// Characteristic: the moves made since leaving the start cell.

/// Append-only move log. Copies share one buffer; a copy that appends while the buffer has
/// already grown past it takes a private copy first, so every value stays immutable.
class Characteristic {
 public:
  Characteristic() = default;

  static Characteristic from_moves(const std::vector<Move>& moves) {
    Characteristic c;
    for (auto m : moves) c = c.extended(m);
    return c;
  }

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  Cell displacement() const { return disp_; }

  /// Rank bytes 0..3 for N, E, S, W, so byte order is the N<E<S<W order with prefixes first.
  std::string_view ranks() const { return buf_ ? std::string_view(buf_->data(), len_) : std::string_view(); }

  Move at(std::size_t i) const { return static_cast<Move>(ranks()[i]); }

  Characteristic extended(Move m) const {
    if (m == Move::P) return *this;
    Characteristic out = *this;
    if (!out.buf_ || out.buf_->size() != out.len_) {
      out.buf_ = std::make_shared<std::string>(ranks());
    }
    out.buf_->push_back(static_cast<char>(m));
    ++out.len_;
    out.disp_ = apply(out.disp_, m);
    return out;
  }

  std::string to_text() const {
    std::string out;
    out.reserve(len_);
    for (char r : ranks()) out += letter(static_cast<Move>(r));
    return out;
  }

  friend std::strong_ordering operator<=>(const Characteristic& a, const Characteristic& b) {
    return a.ranks().compare(b.ranks()) <=> 0;
  }
  friend bool operator==(const Characteristic& a, const Characteristic& b) { return a.ranks() == b.ranks(); }

 private:
  std::shared_ptr<std::string> buf_;
  std::size_t len_ = 0;
  Cell disp_{0, 0};
};

// ---------------------------------------------------------------------------
// Paths. A bag entry is the displacement to a waiting cell; its path is the canonical
// one: East/West moves first, then North/South.

inline std::vector<Move> canonical_path(const Cell& d) {
  std::vector<Move> out;
  out.insert(out.end(), static_cast<std::size_t>(d.x < 0 ? -d.x : d.x), d.x < 0 ? Move::W : Move::E);
  out.insert(out.end(), static_cast<std::size_t>(d.y < 0 ? -d.y : d.y), d.y < 0 ? Move::S : Move::N);
  return out;
}

inline std::string path_key(const Cell& d) {
  std::string out;
  for (auto m : canonical_path(d)) out += static_cast<char>(m);
  return out;
}

inline std::string path_text(const Cell& d) {
  std::string out;
  for (auto m : canonical_path(d)) out += letter(m);
  return out;
}

inline Cell path_end(const std::vector<Move>& path) {
  Cell c{0, 0};
  for (auto m : path) c = apply(c, m);
  return c;
}

/// Moves leading back along the reverse of `ch`, shortened to the canonical path with the
/// same endpoint.
inline std::vector<Move> return_path(const Characteristic& ch) {
  const Cell d = ch.displacement();
  return canonical_path({-d.x, -d.y});
}

using Bag = std::vector<Cell>;  // displacements in absorption order

inline Cell slot_offset(Slot s) { return s == Slot::P ? Cell{0, 0} : offset(static_cast<Dir>(static_cast<int>(s) - 1)); }

inline Slot opposite(Slot s) { return s == Slot::P ? Slot::P : slot_of(opposite(static_cast<Dir>(static_cast<int>(s) - 1))); }

inline constexpr char slot_letter(Slot s) { return "PNESW"[static_cast<int>(s)]; }

// ---------------------------------------------------------------------------
// Agent state

enum class GGPhase : std::uint8_t { Approach, Contesting, Waiting, Guiding, FinalWalk, Final };

inline constexpr std::string_view kGGPhaseNames[] = {"approach", "contesting", "waiting", "guiding", "final-walk", "ω"};

inline bool basic_approach(GGPhase p) { return p == GGPhase::Approach || p == GGPhase::Contesting; }

struct Ack {
  Slot slot = Slot::P;  // where the absorbed loser sits, seen from the absorber
  Characteristic ch;
  std::size_t taken = 0;  // how many of the loser's bag entries are already absorbed

  friend auto operator<=>(const Ack&, const Ack&) = default;
  friend bool operator==(const Ack&, const Ack&) = default;
};

struct GGState {
  GGPhase phase = GGPhase::Approach;
  std::uint64_t n = 0;
  Characteristic ch;
  Bag bag;
  std::vector<Ack> acks;  // absorbed losers that have not yet shown they settled
  bool champion = false;

  // waiting
  bool settled = false;
  Slot captor_slot = Slot::P;
  Characteristic captor_ch;

  // guiding and final walk
  std::vector<Cell> itinerary;  // remaining visit targets, relative to the guiding cell
  Cell home{0, 0};              // guiding cell relative to the current cell
  std::vector<Move> route;      // remaining moves of the current leg
  bool outbound = false;
  bool delivering = false;

  // approach route
  std::uint8_t coins = 0;
  std::uint8_t coin_value = 0;
  std::uint32_t epoch = 0;
  bool searching = false;
  std::uint64_t progress = 0;
  std::uint32_t leg = 0;
  std::uint32_t leg_pos = 0;
  Cell base{0, 0};  // current cell relative to the epoch's home cell

  Move step = Move::P;

  friend auto operator<=>(const GGState&, const GGState&) = default;
  friend bool operator==(const GGState&, const GGState&) = default;
};

// ---------------------------------------------------------------------------
// Procedure pieces

struct ContestResult {
  bool lose = false;
  std::size_t captor = 0;  // index of the winning rival when lose
};

/// Decides a contest against the visible Basic Approach rivals.
inline ContestResult contest(const Characteristic& self, const std::vector<std::pair<Slot, Characteristic>>& rivals) {
  ContestResult out;
  std::optional<std::size_t> best;
  auto beats_self = [&](std::size_t i) {
    const auto& [slot, ch] = rivals[i];
    if (ch != self) return ch > self;
    return slot == Slot::N || slot == Slot::E;
  };
  for (std::size_t i = 0; i < rivals.size(); ++i) {
    if (rivals[i].first == Slot::P && rivals[i].second == self)
      throw Error("two agents with equal characteristics share a cell");
    if (!beats_self(i)) continue;
    if (!best || rivals[i].second > rivals[*best].second) best = i;
  }
  if (best) {
    out.lose = true;
    out.captor = *best;
  }
  return out;
}

/// Bag after taking in losers: each loser at `where` (relative to the winner) and its own bag.
inline Bag absorb(Bag winner, const std::vector<std::pair<Cell, Bag>>& losers) {
  for (const auto& [where, bag] : losers) {
    winner.push_back(where);
    for (const auto& p : bag) winner.push_back(where + p);
  }
  return winner;
}

/// Distinct waiting cells in visiting order: lexicographic on canonical paths, N<E<S<W.
inline std::vector<Cell> guiding_plan(const Bag& bag) {
  std::vector<Cell> cells(bag.begin(), bag.end());
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return path_key(a) < path_key(b); });
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return cells;
}

/// A waiting agent met by a delivering champion starts its final walk toward the
/// champion's start cell. Anything else is left unchanged.
inline std::pair<GGState, GGState> deliver(const GGState& champion, const GGState& waiting) {
  if (waiting.phase != GGPhase::Waiting) return {champion, waiting};
  GGState w = waiting;
  w.phase = GGPhase::FinalWalk;
  w.route = return_path(champion.ch);
  w.bag.clear();
  w.settled = true;
  return {champion, w};
}

/// LazyRandomWalk: stay or move to a random neighbor, one decision per three bits.
/// ExpandingSearch: epochs of growing radius; each epoch a coin makes the agent either
/// sweep a square spiral around its home cell and come back, or wait there as long.
enum class ApproachKind : std::uint8_t { LazyRandomWalk, ExpandingSearch };

inline std::string_view approach_name(ApproachKind k) {
  return k == ApproachKind::LazyRandomWalk ? "random-walk" : "expanding-search";
}

inline std::optional<ApproachKind> approach_from_name(std::string_view s) {
  if (s == "random-walk") return ApproachKind::LazyRandomWalk;
  if (s == "expanding-search") return ApproachKind::ExpandingSearch;
  return std::nullopt;
}

/// Randomized Turing machine with the agent count as input.
class GeneralMachine {
 public:
  using State = GGState;
  static constexpr std::string_view kName = "general";
  static constexpr bool kRandomized = true;
  static constexpr bool kFiniteState = false;
  static constexpr bool kHasInput = true;

  explicit GeneralMachine(ApproachKind approach = ApproachKind::LazyRandomWalk) : approach_(approach) {}

  State initial(const std::optional<std::string>& input) const {
    if (!input) throw Error("general machine needs the agent count as input");
    State q;
    q.n = decode_count(*input);
    return q;
  }

  State transition(const State& q, const Observation<State>& obs, std::optional<bool> bit) const {
    State next = q;
    next.step = Move::P;
    switch (q.phase) {
      case GGPhase::Approach:
      case GGPhase::Contesting: basic_approach_step(next, obs, bit.value_or(false)); break;
      case GGPhase::Waiting: waiting_step(next, obs); break;
      case GGPhase::Guiding: guiding_step(next, obs); break;
      case GGPhase::FinalWalk: final_step(next, obs); break;
      case GGPhase::Final: break;
    }
    if (next.step != Move::P) move_by(next, next.step);
    return next;
  }

  Move action(const State& q) const { return q.step; }
  bool is_final(const State& q) const { return q.phase == GGPhase::Final; }

  std::string serialize(const State& q) const {
    if (q.phase == GGPhase::Final) return "ω";
    std::string out = std::string(kGGPhaseNames[static_cast<int>(q.phase)]);
    if (q.phase == GGPhase::Waiting) out += q.settled ? "/settled" : "/fresh";
    out += " n=" + std::to_string(q.n) + " ch=" + q.ch.to_text() + " bag=[";
    for (std::size_t i = 0; i < q.bag.size(); ++i) out += (i ? "," : "") + path_text(q.bag[i]);
    out += "] role=";
    out += q.champion ? "champion" : basic_approach(q.phase) ? "undecided" : "loser";
    if (!q.acks.empty()) {
      out += " ack=[";
      for (std::size_t i = 0; i < q.acks.size(); ++i)
        out += (i ? "," : "") + std::string(1, slot_letter(q.acks[i].slot)) + ":" + q.acks[i].ch.to_text() + "/" +
               std::to_string(q.acks[i].taken);
      out += "]";
    }
    if (q.phase == GGPhase::Waiting && !q.settled)
      out += " captor=" + std::string(1, slot_letter(q.captor_slot)) + ":" + q.captor_ch.to_text();
    if (q.phase == GGPhase::Guiding || q.phase == GGPhase::FinalWalk) {
      out += " route=";
      for (auto m : q.route) out += letter(m);
      if (q.delivering) out += " delivering";
    }
    out += " step=";
    out += letter(q.step);
    return out;
  }

 private:
  using Group = ObservedGroup<State>;

  template <typename F>
  static void for_each_visible(const Observation<State>& obs, F&& f) {
    for (int s = 0; s < 5; ++s)
      for (const auto& g : obs.slots[static_cast<std::size_t>(s)]) f(static_cast<Slot>(s), g);
  }

  static void move_by(State& q, Move m) {
    q.ch = q.ch.extended(m);
    const Cell d = apply(Cell{0, 0}, m);
    for (auto& p : q.bag) p = p - d;
    q.home = q.home - d;
  }

  /// Drops acknowledgements whose loser is visibly settled or already released.
  static void clear_acks(State& q, const Observation<State>& obs) {
    std::erase_if(q.acks, [&](const Ack& a) {
      for (const auto& g : obs.at(a.slot)) {
        if (g.state.ch != a.ch) continue;
        if (g.state.phase == GGPhase::Waiting && !g.state.settled) return false;
        return true;
      }
      return false;
    });
  }

  static bool points_at(const State& loser, Slot loser_slot, const Characteristic& me) {
    return loser.phase == GGPhase::Waiting && !loser.settled && loser.captor_slot == opposite(loser_slot) &&
           loser.captor_ch == me;
  }

  static const Ack* find_ack(const std::vector<Ack>& acks, Slot slot, const Characteristic& ch) {
    for (const auto& a : acks)
      if (a.slot == slot && a.ch == ch) return &a;
    return nullptr;
  }

  /// Takes in every fresh loser pointing here, or the part of its bag not taken yet.
  static void absorb_pointing(State& q, const Observation<State>& obs) {
    for_each_visible(obs, [&](Slot s, const Group& g) {
      const State& f = g.state;
      if (!points_at(f, s, q.ch)) return;
      auto it = std::find_if(q.acks.begin(), q.acks.end(), [&](const Ack& a) { return a.slot == s && a.ch == f.ch; });
      if (it == q.acks.end()) {
        q.bag = absorb(std::move(q.bag), {{slot_offset(s), f.bag}});
        q.acks.push_back({s, f.ch, f.bag.size()});
        return;
      }
      for (std::size_t i = it->taken; i < f.bag.size(); ++i) q.bag.push_back(slot_offset(s) + f.bag[i]);
      it->taken = std::max(it->taken, f.bag.size());
    });
    if (q.bag.size() + 1 > q.n) throw Error("bag holds more than n-1 agents");
    std::sort(q.acks.begin(), q.acks.end());
  }

  static Move spiral_search(State& q, bool bit) {
    static constexpr Move kLegs[] = {Move::E, Move::N, Move::W, Move::S};
    const std::uint64_t radius = q.epoch;
    const std::uint64_t sweep = (2 * radius + 1) * (2 * radius + 1) - 1;
    if (q.epoch == 0 || (q.progress >= sweep + radius && q.base == Cell{0, 0})) {
      ++q.epoch;
      q.searching = bit;
      q.progress = 0;
      q.leg = 0;
      q.leg_pos = 0;
      return Move::P;
    }
    if (!q.searching) {
      ++q.progress;
      return Move::P;
    }
    if (q.progress < sweep) {
      const Move m = kLegs[q.leg % 4];
      if (++q.leg_pos == q.leg / 2 + 1) {
        ++q.leg;
        q.leg_pos = 0;
      }
      ++q.progress;
      return m;
    }
    q.progress = std::max(q.progress, sweep + radius);
    if (q.base.x != 0) return q.base.x > 0 ? Move::W : Move::E;
    if (q.base.y != 0) return q.base.y > 0 ? Move::S : Move::N;
    return Move::P;
  }

  Move approach_move(State& q, bool bit) const {
    if (approach_ == ApproachKind::ExpandingSearch) {
      Move m = spiral_search(q, bit);
      q.base = apply(q.base, m);
      return m;
    }
    // Lazy random walk from one bit per look: a first bit decides stay or move, two more pick
    // the direction.
    if (q.coins == 0) {
      if (!bit) return Move::P;
      q.coins = 1;
      q.coin_value = 0;
      return Move::P;
    }
    q.coin_value = static_cast<std::uint8_t>(q.coin_value * 2 + (bit ? 1 : 0));
    if (++q.coins < 3) return Move::P;
    q.coins = 0;
    return static_cast<Move>(q.coin_value);
  }

  void basic_approach_step(State& q, const Observation<State>& obs, bool bit) const {
    std::vector<std::pair<Slot, Characteristic>> rivals;
    for_each_visible(obs, [&](Slot s, const Group& g) {
      if (basic_approach(g.state.phase)) rivals.emplace_back(s, g.state.ch);
    });
    auto verdict = contest(q.ch, rivals);
    if (verdict.lose) {
      q.phase = GGPhase::Waiting;
      q.settled = false;
      q.captor_slot = rivals[verdict.captor].first;
      q.captor_ch = rivals[verdict.captor].second;
      q.coins = 0;
      return;
    }

    absorb_pointing(q, obs);
    clear_acks(q, obs);

    if (q.bag.size() + 1 == q.n && q.acks.empty()) {
      q.phase = GGPhase::Guiding;
      q.champion = true;
      q.itinerary = guiding_plan(q.bag);
      q.home = {0, 0};
      q.route.clear();
      q.coins = 0;
      guiding_step(q, obs);
      return;
    }
    if (!rivals.empty() || !q.acks.empty()) {
      q.phase = GGPhase::Contesting;
      return;
    }
    q.phase = GGPhase::Approach;
    q.step = approach_move(q, bit);
  }

  void waiting_step(State& q, const Observation<State>& obs) const {
    clear_acks(q, obs);
    if (q.acks.empty()) {
      for (const auto& g : obs.at(Slot::P)) {
        if (g.state.phase == GGPhase::Guiding && g.state.delivering) {
          q = deliver(g.state, q).second;
          return;
        }
      }
    }
    if (q.settled) return;
    absorb_pointing(q, obs);
    for (const auto& g : obs.at(q.captor_slot)) {
      const State& c = g.state;
      if (c.ch != q.captor_ch) continue;
      if (const Ack* a = find_ack(c.acks, opposite(q.captor_slot), q.ch)) {
        if (a->taken == q.bag.size() && q.acks.empty()) {
          q.settled = true;
          q.bag.clear();
        }
        return;
      }
      if (basic_approach(c.phase) || (c.phase == GGPhase::Waiting && !c.settled)) return;
    }
    q.phase = GGPhase::Approach;
    q.captor_ch = {};
    q.captor_slot = Slot::P;
  }

  void guiding_step(State& q, const Observation<State>& obs) const {
    if (q.delivering) {
      for (const auto& g : obs.at(Slot::P))
        if (g.state.phase == GGPhase::Waiting) return;
      q.delivering = false;
      std::erase(q.bag, Cell{0, 0});
      q.route = canonical_path(q.home);
      q.outbound = false;
    }
    if (q.route.empty() && q.home == Cell{0, 0}) {
      if (q.itinerary.empty()) {
        q.phase = GGPhase::FinalWalk;
        q.route = return_path(q.ch);
        final_step(q, obs);
        return;
      }
      Cell target = q.itinerary.front();
      q.itinerary.erase(q.itinerary.begin());
      q.route = canonical_path(target);
      q.outbound = true;
      if (q.route.empty()) {
        q.delivering = true;
        return;
      }
    }
    if (q.route.empty()) return;
    q.step = q.route.front();
    q.route.erase(q.route.begin());
    if (q.route.empty() && q.outbound) q.delivering = true;
  }

  void final_step(State& q, const Observation<State>& obs) const {
    if (!q.route.empty()) {
      q.step = q.route.front();
      q.route.erase(q.route.begin());
      return;
    }
    std::uint64_t arrived = 0;
    for (const auto& g : obs.at(Slot::P)) {
      const auto& o = g.state;
      if (o.phase == GGPhase::Final || (o.phase == GGPhase::FinalWalk && o.route.empty()))
        arrived += static_cast<std::uint64_t>(g.count);
    }
    if (arrived + 1 == q.n) q.phase = GGPhase::Final;
  }

  ApproachKind approach_;
};

inline GeneralMachine gg_machine() { return GeneralMachine{}; }

// ---------------------------------------------------------------------------
// Runtime checks

namespace detail {

/// For a fresh loser its captor already acknowledged: how many bag entries the captor took.
inline std::optional<std::size_t> absorbed(const World<GeneralMachine>& world, const AgentRuntime<GeneralMachine>& a) {
  const auto& q = a.state;
  const Cell captor_cell = a.cell + slot_offset(q.captor_slot);
  for (auto id : world.ids_at(captor_cell)) {
    const auto& c = world.agents()[id].state;
    if (c.ch != q.captor_ch) continue;
    for (const auto& ack : c.acks)
      if (ack.slot == opposite(q.captor_slot) && ack.ch == q.ch) return ack.taken;
  }
  return std::nullopt;
}

}  // namespace detail

/// Characteristic extended by exactly the committed move, and start + characteristic = cell.
inline Auditor<GeneralMachine> audit_characteristics() {
  auto prev = std::make_shared<std::vector<std::size_t>>();
  return [prev](const World<GeneralMachine>& world, const RoundInfo<GeneralMachine>& info) -> std::optional<std::string> {
    const auto& agents = world.agents();
    if (prev->empty()) prev->assign(agents.size(), 0);
    for (const auto& c : info.commits) {
      const auto& a = agents[c.agent];
      const auto& ch = a.state.ch;
      const std::size_t expected = (*prev)[c.agent] + (c.from != c.to ? 1 : 0);
      if (ch.size() != expected) return "characteristic of agent " + std::to_string(c.agent) + " has wrong length";
      if (c.from != c.to && apply(c.from, ch.at(ch.size() - 1)) != c.to)
        return "characteristic of agent " + std::to_string(c.agent) + " does not record its move";
      if (a.start + ch.displacement() != a.cell)
        return "characteristic of agent " + std::to_string(c.agent) + " does not lead to its cell";
      (*prev)[c.agent] = ch.size();
    }
    return std::nullopt;
  };
}

/// Every bag path lands on a cell with enough waiting agents.
inline Auditor<GeneralMachine> audit_bag_paths() {
  return [](const World<GeneralMachine>& world, const RoundInfo<GeneralMachine>& info) -> std::optional<std::string> {
    if (info.commits.empty()) return std::nullopt;
    for (const auto& a : world.agents()) {
      const auto& q = a.state;
      if (q.bag.empty() || (q.phase == GGPhase::Waiting && q.settled)) continue;
      std::map<Cell, int> need;
      for (const auto& p : q.bag) ++need[a.cell + p];
      for (const auto& [cell, k] : need) {
        if (q.phase == GGPhase::Guiding && q.delivering && cell == a.cell) continue;
        int waiting = 0;
        for (auto id : world.ids_at(cell)) waiting += world.agents()[id].state.phase == GGPhase::Waiting;
        if (waiting < k)
          return "bag of agent " + std::to_string(a.id) + " points at " + to_string(cell) + " without a waiting agent";
      }
    }
    return std::nullopt;
  };
}

/// Every agent is exactly one of: active, held in exactly one bag, or released. Also the
/// number of agents still competing never grows.
inline Auditor<GeneralMachine> audit_conservation() {
  auto last = std::make_shared<std::optional<std::size_t>>();
  return [last](const World<GeneralMachine>& world, const RoundInfo<GeneralMachine>& info) -> std::optional<std::string> {
    if (info.commits.empty()) return std::nullopt;
    std::uint64_t total = 0;
    std::size_t competing = 0;
    const auto& agents = world.agents();
    for (const auto& a : agents) {
      const auto& q = a.state;
      switch (q.phase) {
        case GGPhase::Approach:
        case GGPhase::Contesting:
          total += 1 + q.bag.size();
          ++competing;
          break;
        case GGPhase::Waiting:
          if (q.settled) break;
          if (auto taken = detail::absorbed(world, a)) {
            if (*taken > q.bag.size()) return "agent " + std::to_string(a.id) + " lost part of its bag";
            total += q.bag.size() - *taken;
          } else {
            total += 1 + q.bag.size();
            ++competing;
          }
          break;
        case GGPhase::Guiding: {
          total += 1 + q.bag.size();
          if (q.delivering) {
            std::size_t here = static_cast<std::size_t>(std::count(q.bag.begin(), q.bag.end(), Cell{0, 0}));
            std::size_t waiting = 0;
            for (auto id : world.ids_at(a.cell)) waiting += agents[id].state.phase == GGPhase::Waiting;
            total = total - here + waiting;
          }
          break;
        }
        case GGPhase::FinalWalk:
        case GGPhase::Final: total += 1; break;
      }
    }
    const auto n = agents.front().state.n;
    if (total != n) return "agent accounting gives " + std::to_string(total) + " instead of " + std::to_string(n);
    if (*last && competing > **last) return "number of competing agents grew";
    *last = competing;
    return std::nullopt;
  };
}

inline std::vector<Auditor<GeneralMachine>> general_auditors() {
  return {audit_characteristics(), audit_bag_paths(), audit_conservation()};
}

}  // namespace gridgather

#endif  // GRIDGATHER_GENERAL_HPP
