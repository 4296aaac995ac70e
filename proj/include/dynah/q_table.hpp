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

#ifndef DYNAH_Q_TABLE_HPP_
#define DYNAH_Q_TABLE_HPP_

#include <string>
#include <vector>

#include "dynah/gridworld.hpp"

namespace dynah {

/// Dense action-value table over one grid's cells, zero-initialized.
class QTable {
 public:
  QTable(int height, int width);
  explicit QTable(const GridMap& grid) : QTable(grid.height(), grid.width()) {}

  int height() const { return height_; }
  int width() const { return width_; }

  double value(Position s, Move a) const { return values_[slot(s, a)]; }
  /// Throws std::invalid_argument for non-finite values.
  void set(Position s, Move a, double v);

  double max_value(Position s) const;

  /// Nonzero entries as `row col move value` lines, ordered by
  /// (row, col, move); values printed with 17 significant digits.
  std::string dump() const;

  friend bool operator==(const QTable&, const QTable&) = default;

 private:
  std::size_t slot(Position s, Move a) const;

  int height_;
  int width_;
  std::vector<double> values_;
};

}  // namespace dynah

#endif  // DYNAH_Q_TABLE_HPP_
