// Copyright 2026 The dynah Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dynah/astar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace dynah {

double euclidean_distance(Position a, Position b) {
  const double dr = a.row - b.row;
  const double dc = a.col - b.col;
  return std::sqrt(dr * dr + dc * dc);
}

namespace {

struct OpenEntry {
  double f;
  int g;
  std::size_t cell;
};

// Min-heap on f; among equal f, larger g first.
struct OpenOrder {
  bool operator()(const OpenEntry& a, const OpenEntry& b) const {
    if (a.f != b.f) return a.f > b.f;
    if (a.g != b.g) return a.g < b.g;
    return a.cell > b.cell;
  }
};

constexpr int kUnreached = std::numeric_limits<int>::max();
constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

}  // namespace

PathResult astar_shortest(const GridMap& grid,
                          const std::function<void(Position, double)>& on_expand) {
  const std::size_t n = grid.cell_count();
  std::vector<int> g(n, kUnreached);
  std::vector<std::size_t> parent(n, kNoParent);
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open;

  const Position goal = grid.goal();
  const std::size_t start = grid.index_of(grid.start());
  g[start] = 0;
  open.push({euclidean_distance(grid.start(), goal), 0, start});

  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    // Stale entry: the cell was reached more cheaply since it was pushed.
    if (top.g != g[top.cell]) continue;
    const Position p = grid.position_of(top.cell);
    if (on_expand) on_expand(p, euclidean_distance(p, goal));
    if (p == goal) {
      PathResult result;
      result.found = true;
      result.length = top.g;
      for (std::size_t c = top.cell; c != kNoParent; c = parent[c]) {
        result.path.push_back(grid.position_of(c));
      }
      std::reverse(result.path.begin(), result.path.end());
      return result;
    }
    for (const Move m : kAllMoves) {
      const Position q = neighbor(p, m);
      if (!grid.is_free(q)) continue;
      const std::size_t qi = grid.index_of(q);
      const int candidate = top.g + 1;
      // Reopens q if it was already closed with a worse g.
      if (candidate < g[qi]) {
        g[qi] = candidate;
        parent[qi] = top.cell;
        open.push({candidate + euclidean_distance(q, goal), candidate, qi});
      }
    }
  }
  return {};
}

}  // namespace dynah
