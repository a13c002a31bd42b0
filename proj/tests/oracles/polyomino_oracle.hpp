#ifndef GRIDGATHER_TESTS_POLYOMINO_ORACLE_HPP
#define GRIDGATHER_TESTS_POLYOMINO_ORACLE_HPP

// Brute-force reference: every n-subset of an n-by-n box, filtered by connectivity and
// reduced to a canonical translate. Slow, but shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace gridgather::oracle {

using Pt = std::pair<int, int>;  // (x, y)

inline bool connected(const std::vector<Pt>& cells) {
  std::set<Pt> all(cells.begin(), cells.end());
  std::set<Pt> seen{cells.front()};
  std::vector<Pt> todo{cells.front()};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    const Pt nbs[] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
    for (const auto& nb : nbs)
      if (all.count(nb) && seen.insert(nb).second) todo.push_back(nb);
  }
  return seen.size() == all.size();
}

inline std::vector<Pt> normalize(std::vector<Pt> cells) {
  int mx = cells[0].first, my = cells[0].second;
  for (auto [x, y] : cells) mx = std::min(mx, x), my = std::min(my, y);
  for (auto& [x, y] : cells) x -= mx, y -= my;
  std::sort(cells.begin(), cells.end());
  return cells;
}

/// Complement of the cells within their bounding box grown by one: the shape is
/// contractible when every empty cell there reaches the border.
inline bool no_holes(const std::vector<Pt>& cells) {
  std::set<Pt> occ(cells.begin(), cells.end());
  int x0 = 1 << 30, y0 = 1 << 30, x1 = -(1 << 30), y1 = -(1 << 30);
  for (auto [x, y] : cells) x0 = std::min(x0, x), y0 = std::min(y0, y), x1 = std::max(x1, x), y1 = std::max(y1, y);
  --x0, --y0, ++x1, ++y1;
  std::set<Pt> seen{{x0, y0}};
  std::vector<Pt> todo{{x0, y0}};
  while (!todo.empty()) {
    auto [x, y] = todo.back();
    todo.pop_back();
    const Pt nbs[] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
    for (const auto& nb : nbs) {
      if (nb.first < x0 || nb.first > x1 || nb.second < y0 || nb.second > y1) continue;
      if (occ.count(nb) || !seen.insert(nb).second) continue;
      todo.push_back(nb);
    }
  }
  std::int64_t empty = static_cast<std::int64_t>(x1 - x0 + 1) * (y1 - y0 + 1) - static_cast<std::int64_t>(occ.size());
  return static_cast<std::int64_t>(seen.size()) == empty;
}

inline std::set<std::vector<Pt>> polyominoes(int n, bool contractible_only = false) {
  std::set<std::vector<Pt>> out;
  const int box = n * n;
  std::vector<int> pick(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<Pt> cells;
    for (int v : pick) cells.emplace_back(v % n, v / n);
    if (connected(cells) && (!contractible_only || no_holes(cells))) out.insert(normalize(cells));
    int i = n - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == box - n + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace gridgather::oracle

#endif  // GRIDGATHER_TESTS_POLYOMINO_ORACLE_HPP
