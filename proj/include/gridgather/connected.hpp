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

#ifndef GRIDGATHER_CONNECTED_HPP
#define GRIDGATHER_CONNECTED_HPP

#include <algorithm>
#include <array>
#include <cctype>
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

// ---------------------------------------------------------------------------
// Direction sequences. Stored one char per letter: N E S W, lowercase when primed.

using DirSeq = std::string;
using Board = std::set<DirSeq>;

constexpr char prime(char c) {
  return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : static_cast<char>(c - 'A' + 'a');
}

inline bool is_clean(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= 'A' && c <= 'Z'; });
}

inline DirSeq mirror(std::string_view s) {
  DirSeq out(s.rbegin(), s.rend());
  for (auto& c : out) c = prime(c);
  return out;
}

inline Cell displacement(std::string_view s) {
  Cell c{0, 0};
  for (char ch : s) {
    auto d = dir_from_letter(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    if (!d) throw Error(std::string("bad direction letter '") + ch + "'");
    c = c + offset(*d);
  }
  return c;
}

/// Canonical text: letters with an apostrophe for primes, comma-separated.
inline std::string seq_to_text(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    if (s[i] >= 'a' && s[i] <= 'z') out += '\'';
  }
  return out;
}

inline DirSeq seq_from_text(std::string_view text) {
  DirSeq out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (!dir_from_letter(c)) throw Error("bad direction letter at column " + std::to_string(i + 1));
    ++i;
    bool primed = i < text.size() && text[i] == '\'';
    if (primed) ++i;
    out += primed ? prime(c) : c;
    if (i < text.size()) {
      if (text[i] != ',') throw Error("expected ',' at column " + std::to_string(i + 1));
      ++i;
      if (i == text.size()) throw Error("trailing ','");
    }
  }
  return out;
}

inline std::string board_to_text(const Board& b) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : b) {
    if (!first) out += ';';
    first = false;
    out += "(" + seq_to_text(s) + ")";
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Agent state

struct CGState {
  Board black;
  Board red;
  Board black_closed;  // sequences erased on completing a search call
  Board red_closed;
  std::array<Board, 4> seen_black;  // neighbor boards at the previous look, by direction
  std::array<Board, 4> seen_red;
  bool informed = false;
  bool ready = false;
  bool final = false;
  std::vector<Cell> map;  // relative to the agent's initial cell
  std::int64_t n = 0;
  std::optional<std::vector<Move>> plan;
  Move step = Move::P;

  friend auto operator<=>(const CGState&, const CGState&) = default;
  friend bool operator==(const CGState&, const CGState&) = default;
};

/// Neighbor boards of one color by direction: the union over the agents there plus the empty
/// sequence, or nullopt for an empty cell.
using NeighborBoards = std::array<std::optional<Board>, 4>;

namespace detail {

inline NeighborBoards neighbor_boards(const Observation<CGState>& obs, bool red) {
  NeighborBoards out;
  for (Dir d : kDirs) {
    const auto& groups = obs.at(d);
    if (groups.empty()) continue;
    Board b{DirSeq{}};
    for (const auto& g : groups) {
      const auto& src = red ? g.state.red : g.state.black;
      b.insert(src.begin(), src.end());
    }
    out[static_cast<int>(d)] = std::move(b);
  }
  return out;
}

/// s = sigma . beta . beta' with beta clean, nonempty and starting with letter(d).
inline bool extends_with_return(std::string_view s, std::string_view sigma, Dir d) {
  if (s.size() <= sigma.size() || s.substr(0, sigma.size()) != sigma) return false;
  auto rest = s.substr(sigma.size());
  if (rest.size() % 2) return false;
  auto beta = rest.substr(0, rest.size() / 2);
  return is_clean(beta) && beta.front() == letter(d) && rest.substr(rest.size() / 2) == mirror(beta);
}

/// Longest prefix of alpha held by the agent (the empty sequence always is) such that the
/// remainder followed by x leads back to the agent's own cell.
inline bool closes_loop(const Board& own, const Board& closed, std::string_view alpha, char x) {
  for (std::size_t k = alpha.size() + 1; k-- > 0;) {
    auto head = DirSeq(alpha.substr(0, k));
    if (!head.empty() && !own.count(head) && !closed.count(head)) continue;
    auto loop = DirSeq(alpha.substr(k)) + x;
    if (displacement(loop) == Cell{0, 0}) return true;
  }
  return false;
}

}  // namespace detail

/// One look of the search bookkeeping for one board color.
inline void search_step(Board& own, Board& closed, std::array<Board, 4>& seen, const NeighborBoards& nb) {
  int occupied = 0;
  for (const auto& b : nb) occupied += b.has_value();
  const bool leaf = occupied == 1;
  std::vector<DirSeq> add;
  std::vector<DirSeq> erase;

  for (Dir d : kDirs) {
    const auto& b = nb[static_cast<int>(d)];
    if (!b) continue;
    const char x = letter(opposite(d));
    for (const auto& alpha : *b) {
      if (!is_clean(alpha) || seen[static_cast<int>(d)].count(alpha)) continue;
      if (leaf || detail::closes_loop(own, closed, alpha, x)) {
        add.push_back(alpha + x + prime(x));
      } else {
        add.push_back(alpha + x);
      }
    }
  }

  for (const auto& sigma : own) {
    if (sigma.empty() || !is_clean(sigma)) continue;
    const char x = sigma.back();
    const Dir parent = opposite(*dir_from_letter(x));
    const auto& pb = nb[static_cast<int>(parent)];
    if (!pb || !pb->count(sigma.substr(0, sigma.size() - 1))) continue;
    std::vector<DirSeq> ext;
    bool complete = true;
    int others = 0;
    for (Dir d : kDirs) {
      const auto& b = nb[static_cast<int>(d)];
      if (!b || d == parent) continue;
      ++others;
      bool found = false;
      for (const auto& s : *b) {
        if (detail::extends_with_return(s, sigma, d)) {
          found = true;
          ext.push_back(s + prime(x));
        }
      }
      if (!found) {
        complete = false;
        break;
      }
    }
    if (complete && others > 0) {
      add.insert(add.end(), ext.begin(), ext.end());
      erase.push_back(sigma);
    }
  }

  for (auto& s : add) own.insert(std::move(s));
  for (const auto& s : erase) {
    own.erase(s);
    closed.insert(s);
  }
  for (Dir d : kDirs) {
    const auto& b = nb[static_cast<int>(d)];
    seen[static_cast<int>(d)] = b ? *b : Board{};
  }
}

/// Every occupied direction d shows a finished search rooted here: some gamma . gamma' with
/// gamma clean and starting with letter(d). Vacuously true with no neighbors.
inline bool search_finished(const NeighborBoards& nb) {
  for (Dir d : kDirs) {
    const auto& b = nb[static_cast<int>(d)];
    if (!b) continue;
    bool found = false;
    for (const auto& s : *b) {
      if (detail::extends_with_return(s, "", d)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Map relative to the observer and the agent count, from the finished searches its
/// neighbors display.
inline std::pair<std::vector<Cell>, std::int64_t> build_map(const NeighborBoards& nb) {
  if (!search_finished(nb)) throw Error("map requested before the search finished");
  std::set<Cell> cells{{0, 0}};
  for (Dir d : kDirs) {
    const auto& b = nb[static_cast<int>(d)];
    if (!b) continue;
    for (const auto& s : *b) {
      if (!detail::extends_with_return(s, "", d)) continue;
      Cell c{0, 0};
      for (std::size_t i = 0; i < s.size() / 2; ++i) {
        c = c + offset(*dir_from_letter(s[i]));
        cells.insert(c);
      }
    }
  }
  return {std::vector<Cell>(cells.begin(), cells.end()), static_cast<std::int64_t>(cells.size())};
}

/// Moves from self to the East-most cell of the North-most row: North first, then East or West.
inline std::vector<Move> walk_plan(const std::vector<Cell>& map, const Cell& self) {
  if (map.empty()) throw Error("empty map");
  Cell target = map.front();
  for (const auto& c : map)
    if (std::tie(c.y, c.x) > std::tie(target.y, target.x)) target = c;
  std::vector<Move> plan;
  const std::int64_t dy = target.y - self.y;
  const std::int64_t dx = target.x - self.x;
  if (dy < 0) throw Error("agent lies North of the map's top row");
  plan.insert(plan.end(), static_cast<std::size_t>(dy), Move::N);
  plan.insert(plan.end(), static_cast<std::size_t>(dx < 0 ? -dx : dx), dx < 0 ? Move::W : Move::E);
  return plan;
}

inline Cell north_east_target(const std::vector<Cell>& cells) {
  if (cells.empty()) throw Error("empty configuration");
  return *std::max_element(cells.begin(), cells.end(),
                           [](const Cell& a, const Cell& b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
}

inline void map_construction_step(CGState& q, const Observation<CGState>& obs) {
  auto nb = detail::neighbor_boards(obs, false);
  search_step(q.black, q.black_closed, q.seen_black, nb);
  if (!q.informed && search_finished(nb)) {
    auto [map, n] = build_map(nb);
    q.informed = true;
    q.map = std::move(map);
    q.n = n;
  }
}

inline void confirmation_step(CGState& q, const Observation<CGState>& obs) {
  if (!q.informed) return;
  bool all_informed = true;
  for (Dir d : kDirs)
    for (const auto& g : obs.at(d)) all_informed &= g.state.informed;
  if (all_informed) {
    auto nb = detail::neighbor_boards(obs, true);
    search_step(q.red, q.red_closed, q.seen_red, nb);
    if (search_finished(nb)) q.ready = true;
  }
  if (q.ready) return;
  for (const auto& slot : obs.slots)
    for (const auto& g : slot)
      if (g.state.ready) q.ready = true;
  if (obs.agents_at(Slot::P) != 0) q.ready = true;
  for (Dir d : kDirs) {
    const bool expected = std::binary_search(q.map.begin(), q.map.end(), offset(d));
    if (obs.agents_at(slot_of(d)) != (expected ? 1 : 0)) q.ready = true;
  }
}

/// Deterministic Turing machine without input: builds a map by distributed depth-first
/// search, confirms everyone has it, then walks to the East-most cell of the North-most row.
class ConnectedMachine {
 public:
  using State = CGState;
  static constexpr std::string_view kName = "connected";
  static constexpr bool kRandomized = false;
  static constexpr bool kFiniteState = false;
  static constexpr bool kHasInput = false;

  State initial(const std::optional<std::string>&) const { return {}; }

  State transition(const State& q, const Observation<State>& obs, std::optional<bool>) const {
    if (q.final) return q;
    State next = q;
    next.step = Move::P;
    if (!next.ready) {
      map_construction_step(next, obs);
      confirmation_step(next, obs);
    }
    if (!next.ready) return next;
    if (!next.plan) next.plan = walk_plan(next.map, {0, 0});
    if (!next.plan->empty()) {
      next.step = next.plan->front();
      next.plan->erase(next.plan->begin());
      return next;
    }
    if (obs.agents_at(Slot::P) == next.n - 1) next.final = true;
    return next;
  }

  Move action(const State& q) const { return q.step; }
  bool is_final(const State& q) const { return q.final; }

  std::string serialize(const State& q) const {
    if (q.final) return "ω";
    std::string out = "black=" + board_to_text(q.black);
    out += " red=" + board_to_text(q.red);
    out += " tags=";
    out += q.ready ? "informed,ready" : q.informed ? "informed" : "-";
    if (q.informed) {
      out += " n=" + std::to_string(q.n) + " map=";
      for (std::size_t i = 0; i < q.map.size(); ++i) out += (i ? ";" : "") + to_string(q.map[i]);
    }
    if (q.plan) {
      out += " plan=";
      for (auto m : *q.plan) out += letter(m);
      out += " step=";
      out += letter(q.step);
    }
    return out;
  }
};

inline ConnectedMachine cg_machine() { return {}; }

// ---------------------------------------------------------------------------
// Runtime checks

/// No agent moves before it is ready.
inline Auditor<ConnectedMachine> audit_moves_after_ready() {
  return [](const World<ConnectedMachine>& world, const RoundInfo<ConnectedMachine>& info) -> std::optional<std::string> {
    for (const auto& c : info.commits)
      if (c.from != c.to && !world.agents()[c.agent].state.ready)
        return "agent " + std::to_string(c.agent) + " moved before it was ready";
    return std::nullopt;
  };
}

/// Every informed agent's map is the initial configuration seen from its own start cell,
/// and red boards stay empty until the agent is informed.
inline Auditor<ConnectedMachine> audit_maps(const Configuration& initial) {
  auto truth = std::make_shared<const std::vector<Cell>>(initial.cells());
  return [truth](const World<ConnectedMachine>& world, const RoundInfo<ConnectedMachine>&) -> std::optional<std::string> {
    for (const auto& a : world.agents()) {
      const auto& q = a.state;
      if (!q.informed) {
        if (!q.red.empty()) return "agent " + std::to_string(a.id) + " wrote red sequences before it was informed";
        continue;
      }
      if (q.final) continue;
      if (q.n != static_cast<std::int64_t>(truth->size()))
        return "agent " + std::to_string(a.id) + " counted " + std::to_string(q.n) + " agents";
      std::vector<Cell> expected;
      for (const auto& c : *truth) expected.push_back(c - a.start);
      std::sort(expected.begin(), expected.end());
      if (expected != q.map) return "agent " + std::to_string(a.id) + " built a wrong map";
    }
    return std::nullopt;
  };
}

/// Boards only lose sequences by moving them to the erased set.
inline Auditor<ConnectedMachine> audit_board_growth() {
  auto prev = std::make_shared<std::vector<std::pair<Board, Board>>>();
  return [prev](const World<ConnectedMachine>& world, const RoundInfo<ConnectedMachine>& info) -> std::optional<std::string> {
    const auto& agents = world.agents();
    if (prev->empty()) prev->resize(agents.size());
    for (const auto& c : info.commits) {
      const auto& q = agents[c.agent].state;
      auto& [black, red] = (*prev)[c.agent];
      for (const auto& s : black)
        if (!q.black.count(s) && !q.black_closed.count(s)) return "black sequence lost at agent " + std::to_string(c.agent);
      for (const auto& s : red)
        if (!q.red.count(s) && !q.red_closed.count(s)) return "red sequence lost at agent " + std::to_string(c.agent);
      if (!q.final) {
        black = q.black;
        red = q.red;
      }
    }
    return std::nullopt;
  };
}

inline std::vector<Auditor<ConnectedMachine>> connected_auditors(const Configuration& initial) {
  return {audit_moves_after_ready(), audit_maps(initial), audit_board_growth()};
}

}  // namespace gridgather

#endif  // GRIDGATHER_CONNECTED_HPP
