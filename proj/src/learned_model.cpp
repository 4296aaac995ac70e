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

#include "dynah/learned_model.hpp"

#include <stdexcept>

namespace dynah {

LearnedModel::LearnedModel(int height, int width) : height_(height), width_(width) {
  if (height < 1 || width < 1) {
    throw std::invalid_argument("LearnedModel dimensions must be positive");
  }
  entries_.resize(static_cast<std::size_t>(height) * static_cast<std::size_t>(width) *
                  kNumMoves);
}

std::size_t LearnedModel::slot(Position s, Move a) const {
  if (s.row < 0 || s.row >= height_ || s.col < 0 || s.col >= width_) {
    throw std::out_of_range("LearnedModel: state off the grid");
  }
  return (static_cast<std::size_t>(s.row) * static_cast<std::size_t>(width_) +
          static_cast<std::size_t>(s.col)) *
             kNumMoves +
         static_cast<std::size_t>(move_index(a));
}

void LearnedModel::record(Position s, Move a, const Transition& outcome) {
  auto& entry = entries_[slot(s, a)];
  if (!entry) keys_.emplace_back(s, a);
  entry = outcome;
}

bool LearnedModel::has_any(Position s) const {
  const std::size_t base = slot(s, Move::kUp);
  for (std::size_t i = 0; i < kNumMoves; ++i) {
    if (entries_[base + i]) return true;
  }
  return false;
}

std::pair<Position, Move> LearnedModel::sample_observed(RngStream& rng) const {
  if (keys_.empty()) {
    throw std::logic_error("sample_observed: the model has no experience yet");
  }
  return keys_[rng.uniform_index(keys_.size())];
}

}  // namespace dynah
