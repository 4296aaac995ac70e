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

#ifndef DYNAH_ASTAR_HPP_
#define DYNAH_ASTAR_HPP_

#include <functional>
#include <vector>

#include "dynah/gridworld.hpp"

namespace dynah {

struct PathResult {
  bool found = false;
  int length = 0;
  std::vector<Position> path;
};

/// Euclidean distance; never exceeds the 4-connected path length.
double euclidean_distance(Position a, Position b);

/// Optimal 4-connected start->goal path by A* with the Euclidean heuristic.
/// Used to validate learned policies, never to drive an agent.
///
/// `on_expand`, if set, sees every expanded cell with its heuristic value.
PathResult astar_shortest(
    const GridMap& grid,
    const std::function<void(Position, double)>& on_expand = {});

}  // namespace dynah

#endif  // DYNAH_ASTAR_HPP_
