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

#ifndef DYNAH_LEARNED_MODEL_HPP_
#define DYNAH_LEARNED_MODEL_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "dynah/gridworld.hpp"
#include "dynah/rng.hpp"

namespace dynah {

/// One remembered real transition.
struct Transition {
  Position next;
  double reward = 0.0;
  bool terminal = false;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Deterministic table model: (state, move) -> last observed outcome.
///
/// Keys are also kept in first-observation order so planning can sample
/// uniformly over observed pairs.
class LearnedModel {
 public:
  LearnedModel(int height, int width);
  explicit LearnedModel(const GridMap& grid)
      : LearnedModel(grid.height(), grid.width()) {}

  /// Stores (or overwrites) the outcome for (s, a).
  void record(Position s, Move a, const Transition& outcome);

  std::optional<Transition> query(Position s, Move a) const {
    return entries_[slot(s, a)];
  }

  bool has_any(Position s) const;

  /// Uniform draw over observed (state, move) pairs. Throws
  /// std::logic_error when the model is empty.
  std::pair<Position, Move> sample_observed(RngStream& rng) const;

  bool empty() const { return keys_.empty(); }
  std::size_t size() const { return keys_.size(); }
  const std::vector<std::pair<Position, Move>>& observed_keys() const {
    return keys_;
  }

  friend bool operator==(const LearnedModel&, const LearnedModel&) = default;

 private:
  std::size_t slot(Position s, Move a) const;

  int height_;
  int width_;
  std::vector<std::optional<Transition>> entries_;
  std::vector<std::pair<Position, Move>> keys_;
};

}  // namespace dynah

#endif  // DYNAH_LEARNED_MODEL_HPP_
