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

// Badness scores for planning. A heuristic says how bad taking a move in a
// state looks, judged only through the learned model's predicted successor.
// Higher is worse. Dyna-H planning deliberately follows the worst move.

#ifndef DYNAH_HEURISTICS_HPP_
#define DYNAH_HEURISTICS_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dynah/gridworld.hpp"
#include "dynah/learned_model.hpp"
#include "dynah/rng.hpp"

namespace dynah {

class Heuristic {
 public:
  virtual ~Heuristic() = default;

  /// Absent iff (s, a) is not in the model; otherwise finite and >= 0.
  virtual std::optional<double> score(Position s, Move a, const LearnedModel& model,
                                      Position goal) const = 0;

  virtual std::string_view name() const = 0;
};

/// ||Model(s, a) - goal||^2 in (row, col) cell units.
std::optional<double> squared_euclidean_badness(Position s, Move a,
                                                const LearnedModel& model,
                                                Position goal);

class SquaredEuclideanHeuristic final : public Heuristic {
 public:
  static constexpr std::string_view kName = "euclidean-squared";

  std::optional<double> score(Position s, Move a, const LearnedModel& model,
                              Position goal) const override {
    return squared_euclidean_badness(s, a, model, goal);
  }
  std::string_view name() const override { return kName; }
};

/// The modeled move at `s` with the highest badness, ties broken uniformly
/// with `rng`. Absent when no move at `s` is modeled. Draws from `rng` only
/// when more than one move ties for the maximum.
std::optional<Move> heuristic_action(Position s, const Heuristic& h,
                                     const LearnedModel& model, Position goal,
                                     RngStream& rng);

using HeuristicFactory = std::function<std::shared_ptr<const Heuristic>()>;

/// Name-keyed heuristic lookup. `euclidean-squared` is always registered.
/// Thread-safe.
void register_heuristic(std::string name, HeuristicFactory factory);
std::shared_ptr<const Heuristic> make_heuristic(std::string_view name);
std::vector<std::string> heuristic_names();

inline constexpr std::string_view kDefaultHeuristic = SquaredEuclideanHeuristic::kName;

}  // namespace dynah

#endif  // DYNAH_HEURISTICS_HPP_
