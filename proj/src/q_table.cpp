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

#include "dynah/q_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dynah/io.hpp"

namespace dynah {

QTable::QTable(int height, int width) : height_(height), width_(width) {
  if (height < 1 || width < 1) {
    throw std::invalid_argument("QTable dimensions must be positive");
  }
  values_.assign(static_cast<std::size_t>(height) * static_cast<std::size_t>(width) *
                     kNumMoves,
                 0.0);
}

std::size_t QTable::slot(Position s, Move a) const {
  if (s.row < 0 || s.row >= height_ || s.col < 0 || s.col >= width_) {
    throw std::out_of_range("QTable: state off the grid");
  }
  return (static_cast<std::size_t>(s.row) * static_cast<std::size_t>(width_) +
          static_cast<std::size_t>(s.col)) *
             kNumMoves +
         static_cast<std::size_t>(move_index(a));
}

void QTable::set(Position s, Move a, double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("QTable: non-finite value");
  values_[slot(s, a)] = v;
}

double QTable::max_value(Position s) const {
  const std::size_t base = slot(s, Move::kUp);
  return *std::max_element(values_.begin() + static_cast<std::ptrdiff_t>(base),
                           values_.begin() + static_cast<std::ptrdiff_t>(base) +
                               kNumMoves);
}

std::string QTable::dump() const {
  // Storage order is already (row, col, move).
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 0.0) continue;
    const std::size_t cell = i / kNumMoves;
    const auto move = static_cast<Move>(i % kNumMoves);
    out += std::to_string(cell / static_cast<std::size_t>(width_));
    out += ' ';
    out += std::to_string(cell % static_cast<std::size_t>(width_));
    out += ' ';
    out += move_name(move);
    out += ' ';
    out += format_g17(values_[i]);
    out += '\n';
  }
  return out;
}

}  // namespace dynah
