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

#ifndef GRIDGATHER_GRID_HPP
#define GRIDGATHER_GRID_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <compare>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace gridgather {

/// Thrown on contract violations anywhere in the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cell of Z². x grows East, y grows North.
struct Cell {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;

  constexpr Cell operator+(const Cell& o) const { return {x + o.x, y + o.y}; }
  constexpr Cell operator-(const Cell& o) const { return {x - o.x, y - o.y}; }
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << c.x << ',' << c.y;
}

inline std::string to_string(const Cell& c) {
  return std::to_string(c.x) + "," + std::to_string(c.y);
}

/// The four compass directions in their fixed order.
enum class Dir : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline constexpr std::array<Dir, 4> kDirs = {Dir::N, Dir::E, Dir::S, Dir::W};

constexpr Cell offset(Dir d) {
  switch (d) {
    case Dir::N: return {0, 1};
    case Dir::E: return {1, 0};
    case Dir::S: return {0, -1};
    case Dir::W: return {-1, 0};
  }
  return {0, 0};
}

constexpr Dir opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 2) % 4); }

constexpr char letter(Dir d) { return "NESW"[static_cast<int>(d)]; }

inline std::optional<Dir> dir_from_letter(char c) {
  switch (c) {
    case 'N': return Dir::N;
    case 'E': return Dir::E;
    case 'S': return Dir::S;
    case 'W': return Dir::W;
    default: return std::nullopt;
  }
}

inline std::int64_t distance(const Cell& a, const Cell& b) {
  return std::llabs(a.x - b.x) + std::llabs(a.y - b.y);
}

/// Neighbors in N, E, S, W order.
constexpr std::array<Cell, 4> neighbors(const Cell& c) {
  return {Cell{c.x, c.y + 1}, Cell{c.x + 1, c.y}, Cell{c.x, c.y - 1}, Cell{c.x - 1, c.y}};
}

/// Finite multiset of occupied cells. Absent cells are empty; stored counts are >= 1.
class Configuration {
 public:
  Configuration() = default;

  /// One agent per listed cell. Duplicates are rejected.
  static Configuration initial(const std::vector<Cell>& cells) {
    Configuration cfg;
    for (const auto& c : cells) {
      if (cfg.contains(c)) throw Error("duplicate cell " + to_string(c) + " in initial configuration");
      cfg.add(c);
    }
    return cfg;
  }

  void add(const Cell& c, int count = 1) {
    if (count < 1) throw Error("agent count must be positive");
    occupancy_[c] += count;
  }

  void remove(const Cell& c, int count = 1) {
    auto it = occupancy_.find(c);
    if (it == occupancy_.end() || it->second < count) throw Error("removing agents from " + to_string(c) + " that are not there");
    it->second -= count;
    if (it->second == 0) occupancy_.erase(it);
  }

  bool contains(const Cell& c) const { return occupancy_.count(c) != 0; }
  int count(const Cell& c) const {
    auto it = occupancy_.find(c);
    return it == occupancy_.end() ? 0 : it->second;
  }

  bool empty() const { return occupancy_.empty(); }
  std::size_t cell_count() const { return occupancy_.size(); }
  std::size_t agent_count() const {
    std::size_t n = 0;
    for (const auto& [c, k] : occupancy_) n += static_cast<std::size_t>(k);
    return n;
  }

  bool is_initial() const {
    return std::all_of(occupancy_.begin(), occupancy_.end(), [](const auto& kv) { return kv.second == 1; });
  }

  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    out.reserve(occupancy_.size());
    for (const auto& [c, k] : occupancy_) out.push_back(c);
    return out;
  }

  const std::map<Cell, int>& occupancy() const { return occupancy_; }

  Configuration translated(const Cell& v) const {
    Configuration out;
    for (const auto& [c, k] : occupancy_) out.occupancy_[c + v] = k;
    return out;
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration& a, const Configuration& b) { return a.occupancy_ <=> b.occupancy_; }

 private:
  std::map<Cell, int> occupancy_;
};

namespace detail {

inline void require_nonempty(const Configuration& cfg) {
  if (cfg.empty()) throw Error("empty configuration");
}

inline std::size_t reachable_from(const std::set<Cell>& cells, const Cell& start) {
  std::set<Cell> seen{start};
  std::vector<Cell> stack{start};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (const auto& nb : neighbors(c)) {
      if (cells.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
  }
  return seen.size();
}

inline std::set<Cell> cell_set(const Configuration& cfg) {
  auto v = cfg.cells();
  return {v.begin(), v.end()};
}

}  // namespace detail

inline bool is_connected(const Configuration& cfg) {
  detail::require_nonempty(cfg);
  auto cells = detail::cell_set(cfg);
  return detail::reachable_from(cells, *cells.begin()) == cells.size();
}

/// Connected with no hole. Holes are found by flood-filling the empty cells of the
/// bounding box grown by one; the margin ring always belongs to the infinite component.
inline bool is_contractible(const Configuration& cfg) {
  if (!is_connected(cfg)) return false;
  auto cells = cfg.cells();
  std::int64_t x0 = cells.front().x, x1 = x0, y0 = cells.front().y, y1 = y0;
  for (const auto& c : cells) {
    x0 = std::min(x0, c.x);
    x1 = std::max(x1, c.x);
    y0 = std::min(y0, c.y);
    y1 = std::max(y1, c.y);
  }
  --x0, --y0, ++x1, ++y1;
  const auto w = static_cast<std::size_t>(x1 - x0 + 1), h = static_cast<std::size_t>(y1 - y0 + 1);
  std::vector<char> mark(w * h, 0);  // 1 = occupied, 2 = reached
  auto idx = [&](std::int64_t x, std::int64_t y) { return static_cast<std::size_t>(y - y0) * w + static_cast<std::size_t>(x - x0); };
  for (const auto& c : cells) mark[idx(c.x, c.y)] = 1;
  std::vector<Cell> stack{{x0, y0}};
  mark[idx(x0, y0)] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (const auto& nb : neighbors(c)) {
      if (nb.x < x0 || nb.x > x1 || nb.y < y0 || nb.y > y1) continue;
      auto& m = mark[idx(nb.x, nb.y)];
      if (m == 0) {
        m = 2;
        ++reached;
        stack.push_back(nb);
      }
    }
  }
  return reached + cells.size() == w * h;
}

enum class LeafKind : std::uint8_t { None, N, E, S, W };
enum class CornerKind : std::uint8_t { None, NE, NW };

struct AgentRole {
  LeafKind leaf = LeafKind::None;
  CornerKind corner = CornerKind::None;
  bool in4cycle = false;

  friend bool operator==(const AgentRole&, const AgentRole&) = default;
};

/// Occupied-neighbor pattern as a 4-bit mask, bit i set for direction kDirs[i].
inline unsigned neighbor_mask(const Configuration& cfg, const Cell& c) {
  unsigned mask = 0;
  auto nbs = neighbors(c);
  for (int i = 0; i < 4; ++i)
    if (cfg.contains(nbs[i])) mask |= 1u << i;
  return mask;
}

namespace detail {
inline constexpr unsigned bitN = 1, bitE = 2, bitS = 4, bitW = 8;
}

inline LeafKind leaf_kind(unsigned mask) {
  using namespace detail;
  switch (mask) {
    case bitS: return LeafKind::N;
    case bitW: return LeafKind::E;
    case bitN: return LeafKind::S;
    case bitE: return LeafKind::W;
    default: return LeafKind::None;
  }
}

inline CornerKind corner_kind(unsigned mask) {
  using namespace detail;
  if (mask == (bitS | bitW)) return CornerKind::NE;
  if (mask == (bitS | bitE)) return CornerKind::NW;
  return CornerKind::None;
}

inline bool in_full_block(const Configuration& cfg, const Cell& c) {
  for (std::int64_t dx : {-1, 0}) {
    for (std::int64_t dy : {-1, 0}) {
      Cell o{c.x + dx, c.y + dy};
      if (cfg.contains(o) && cfg.contains({o.x + 1, o.y}) && cfg.contains({o.x, o.y + 1}) &&
          cfg.contains({o.x + 1, o.y + 1}))
        return true;
    }
  }
  return false;
}

inline AgentRole classify(const Configuration& cfg, const Cell& c) {
  if (!cfg.contains(c)) throw Error("cell " + to_string(c) + " is not occupied");
  unsigned mask = neighbor_mask(cfg, c);
  return {leaf_kind(mask), corner_kind(mask), in_full_block(cfg, c)};
}

inline std::set<Cell> articulation_cells(const Configuration& cfg) {
  if (!is_connected(cfg)) throw Error("configuration is not connected");
  auto cells = detail::cell_set(cfg);
  std::set<Cell> out;
  if (cells.size() <= 2) return out;
  for (const auto& c : cells) {
    auto rest = cells;
    rest.erase(c);
    if (detail::reachable_from(rest, *rest.begin()) != rest.size()) out.insert(c);
  }
  return out;
}

/// Lemma check on one instance: a multi-cell contractible configuration must have
/// a leaf, or a NE/NW-corner lying on a 2x2 block.
inline bool lemma_geo_holds(const Configuration& cfg) {
  detail::require_nonempty(cfg);
  if (!cfg.is_initial()) throw Error("lemma check requires one agent per cell");
  if (!is_contractible(cfg)) throw Error("lemma check requires a connected contractible configuration");
  if (cfg.cell_count() == 1) return true;
  for (const auto& c : cfg.cells()) {
    auto role = classify(cfg, c);
    if (role.leaf != LeafKind::None) return true;
    if (role.corner != CornerKind::None && role.in4cycle) return true;
  }
  return false;
}

/// Translate so the smallest cell by (y, x) sits at the origin.
inline std::vector<Cell> canonical_cells(std::vector<Cell> cells) {
  if (cells.empty()) return cells;
  auto by_yx = [](const Cell& a, const Cell& b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); };
  std::sort(cells.begin(), cells.end(), by_yx);
  Cell origin = cells.front();
  for (auto& c : cells) c = c - origin;
  return cells;
}

inline int enumeration_limit() {
  if (const char* env = std::getenv("GRIDGATHER_ENUM_LIMIT")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return 12;
}

/// All fixed polyominoes of n cells, canonical and deduplicated, in a deterministic order.
/// Grows every (n-1)-cell polyomino by one adjacent cell.
inline std::vector<Configuration> enumerate_polyominoes(int n, bool contractible_only = false) {
  if (n < 1 || n > enumeration_limit())
    throw Error("polyomino size " + std::to_string(n) + " outside [1, " + std::to_string(enumeration_limit()) + "]");
  std::set<std::vector<Cell>> level{{Cell{0, 0}}};
  for (int k = 2; k <= n; ++k) {
    std::set<std::vector<Cell>> next;
    for (const auto& poly : level) {
      std::set<Cell> present(poly.begin(), poly.end());
      for (const auto& c : poly) {
        for (const auto& nb : neighbors(c)) {
          if (present.count(nb)) continue;
          auto grown = poly;
          grown.push_back(nb);
          next.insert(canonical_cells(std::move(grown)));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Configuration> out;
  out.reserve(level.size());
  for (const auto& poly : level) {
    auto cfg = Configuration::initial(poly);
    if (!contractible_only || is_contractible(cfg)) out.push_back(std::move(cfg));
  }
  return out;
}

/// Parses the shared "x y" per-line text format. '#' starts a comment.
inline std::vector<Cell> parse_cells(std::istream& in) {
  std::vector<Cell> cells;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::int64_t x, y;
    if (!(ss >> x)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw Error("line " + std::to_string(lineno) + ": expected 'x y'");
    }
    if (!(ss >> y)) throw Error("line " + std::to_string(lineno) + ": expected 'x y'");
    std::string extra;
    if (ss >> extra) throw Error("line " + std::to_string(lineno) + ": trailing text '" + extra + "'");
    cells.push_back({x, y});
  }
  return cells;
}

inline std::string format_cells(const Configuration& cfg) {
  std::string out;
  for (const auto& c : cfg.cells()) out += std::to_string(c.x) + " " + std::to_string(c.y) + "\n";
  return out;
}

}  // namespace gridgather

#endif  // GRIDGATHER_GRID_HPP
