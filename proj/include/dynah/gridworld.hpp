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

// Deterministic four-connected grid mazes: cells, moves, transition and
// reward function, random generation and reachability.

#ifndef DYNAH_GRIDWORLD_HPP_
#define DYNAH_GRIDWORLD_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dynah {

struct Position {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

/// The four moves. Declaration order is the iteration order.
enum class Move : std::uint8_t { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };

inline constexpr int kNumMoves = 4;
inline constexpr std::array<Move, kNumMoves> kAllMoves = {
    Move::kUp, Move::kDown, Move::kLeft, Move::kRight};

constexpr int move_index(Move m) { return static_cast<int>(m); }
std::string_view move_name(Move m);
std::optional<Move> parse_move(std::string_view name);

/// Neighbor of `p` in direction `m`, without bounds checks.
constexpr Position neighbor(Position p, Move m) {
  switch (m) {
    case Move::kUp:
      return {p.row - 1, p.col};
    case Move::kDown:
      return {p.row + 1, p.col};
    case Move::kLeft:
      return {p.row, p.col - 1};
    case Move::kRight:
      return {p.row, p.col + 1};
  }
  return p;
}

/// Thrown when a maze cannot be produced from a generation config.
class MazeGenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable maze: dimensions, obstacle mask, start and goal.
class GridMap {
 public:
  /// `obstacles` is row-major with height*width entries. Throws
  /// std::invalid_argument when the invariants do not hold.
  GridMap(int height, int width, std::vector<bool> obstacles, Position start,
          Position goal);

  /// All-free grid.
  static GridMap open(int height, int width, Position start, Position goal);

  int height() const { return height_; }
  int width() const { return width_; }
  Position start() const { return start_; }
  Position goal() const { return goal_; }
  std::size_t cell_count() const { return obstacles_.size(); }

  bool in_bounds(Position p) const {
    return p.row >= 0 && p.row < height_ && p.col >= 0 && p.col < width_;
  }
  bool is_obstacle(Position p) const { return obstacles_[index_of(p)]; }
  bool is_free(Position p) const { return in_bounds(p) && !is_obstacle(p); }
  std::size_t index_of(Position p) const {
    return static_cast<std::size_t>(p.row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(p.col);
  }
  Position position_of(std::size_t index) const {
    return {static_cast<int>(index / static_cast<std::size_t>(width_)),
            static_cast<int>(index % static_cast<std::size_t>(width_))};
  }
  const std::vector<bool>& obstacles() const { return obstacles_; }
  std::size_t obstacle_count() const;

  friend bool operator==(const GridMap&, const GridMap&) = default;

 private:
  int height_;
  int width_;
  std::vector<bool> obstacles_;
  Position start_;
  Position goal_;
};

struct StepOutcome {
  Position next;
  double reward = -1.0;
  bool terminal = false;

  friend bool operator==(const StepOutcome&, const StepOutcome&) = default;
};

inline constexpr double kStepReward = -1.0;
inline constexpr double kGoalReward = 0.0;

/// One environment transition. Moves into walls or off the grid leave the
/// agent in place. Entering the goal pays kGoalReward and ends the episode;
/// every other transition pays kStepReward.
///
/// Throws std::invalid_argument if `at` is off the grid, on a wall, or the
/// goal itself.
StepOutcome step(const GridMap& grid, Position at, Move move);

struct MazeGenConfig {
  int height = 39;
  int width = 36;
  Position start{1, 4};
  Position goal{28, 34};
  double sigma = 0.3;
  std::uint64_t seed = 0;
  int max_attempts = 1000;

  void validate() const;
};

/// Draws one obstacle mask from `seed`: a cell is a wall iff a
/// Normal(0, sigma^2) draw rounds to a nonzero integer. Start and goal are
/// NOT forced free and solvability is not checked.
std::vector<bool> sample_obstacle_mask(int height, int width, double sigma,
                                       std::uint64_t seed);

/// Random solvable maze, a pure function of `cfg`. Attempt k samples a mask
/// from derive_seed(cfg.seed, "attempt", k), frees start and goal, and keeps
/// the first solvable result. Throws MazeGenerationError after
/// cfg.max_attempts failures.
GridMap generate_maze(const MazeGenConfig& cfg);

/// Breadth-first reachability of the goal from the start.
bool is_solvable(const GridMap& grid);

/// Text maze format:
///   height width
///   start_row start_col goal_row goal_col
///   `height` lines of `width` chars from {. # S G}
/// Coordinates are 0-based (row, col).
std::string format_maze(const GridMap& grid);

/// Throws std::invalid_argument with a line-specific reason on bad input.
GridMap parse_maze(std::string_view text);

GridMap read_maze_file(const std::filesystem::path& path);

}  // namespace dynah

#endif  // DYNAH_GRIDWORLD_HPP_
