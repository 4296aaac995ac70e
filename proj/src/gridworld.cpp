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

#include "dynah/gridworld.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <string>

#include "dynah/io.hpp"
#include "dynah/rng.hpp"

namespace dynah {

namespace {

std::string to_string(Position p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

}  // namespace

std::string_view move_name(Move m) {
  switch (m) {
    case Move::kUp:
      return "Up";
    case Move::kDown:
      return "Down";
    case Move::kLeft:
      return "Left";
    case Move::kRight:
      return "Right";
  }
  return "?";
}

std::optional<Move> parse_move(std::string_view name) {
  for (const Move m : kAllMoves) {
    if (move_name(m) == name) return m;
  }
  return std::nullopt;
}

GridMap::GridMap(int height, int width, std::vector<bool> obstacles,
                 Position start, Position goal)
    : height_(height),
      width_(width),
      obstacles_(std::move(obstacles)),
      start_(start),
      goal_(goal) {
  if (height_ < 1 || width_ < 1) {
    throw std::invalid_argument("grid dimensions must be positive");
  }
  if (obstacles_.size() != static_cast<std::size_t>(height_) *
                               static_cast<std::size_t>(width_)) {
    throw std::invalid_argument("obstacle mask size does not match height*width");
  }
  if (!in_bounds(start_)) {
    throw std::invalid_argument("start " + to_string(start_) + " is off the grid");
  }
  if (!in_bounds(goal_)) {
    throw std::invalid_argument("goal " + to_string(goal_) + " is off the grid");
  }
  if (start_ == goal_) throw std::invalid_argument("start equals goal");
  if (is_obstacle(start_)) throw std::invalid_argument("start is an obstacle");
  if (is_obstacle(goal_)) throw std::invalid_argument("goal is an obstacle");
}

GridMap GridMap::open(int height, int width, Position start, Position goal) {
  return GridMap(height, width,
                 std::vector<bool>(static_cast<std::size_t>(std::max(height, 0)) *
                                       static_cast<std::size_t>(std::max(width, 0)),
                                   false),
                 start, goal);
}

std::size_t GridMap::obstacle_count() const {
  return static_cast<std::size_t>(
      std::count(obstacles_.begin(), obstacles_.end(), true));
}

StepOutcome step(const GridMap& grid, Position at, Move move) {
  if (!grid.in_bounds(at)) {
    throw std::invalid_argument("step: " + to_string(at) + " is off the grid");
  }
  if (grid.is_obstacle(at)) {
    throw std::invalid_argument("step: " + to_string(at) + " is an obstacle");
  }
  if (at == grid.goal()) {
    throw std::invalid_argument("step: already at the goal");
  }
  Position next = neighbor(at, move);
  if (!grid.is_free(next)) next = at;
  const bool terminal = next == grid.goal();
  return {next, terminal ? kGoalReward : kStepReward, terminal};
}

void MazeGenConfig::validate() const {
  if (height < 2 || width < 2) {
    throw std::invalid_argument("maze height and width must be at least 2");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("sigma must be a positive finite number");
  }
  if (max_attempts < 1) {
    throw std::invalid_argument("max_attempts must be at least 1");
  }
  const auto inside = [&](Position p) {
    return p.row >= 0 && p.row < height && p.col >= 0 && p.col < width;
  };
  if (!inside(start)) throw std::invalid_argument("start is off the grid");
  if (!inside(goal)) throw std::invalid_argument("goal is off the grid");
  if (start == goal) throw std::invalid_argument("start equals goal");
}

std::vector<bool> sample_obstacle_mask(int height, int width, double sigma,
                                       std::uint64_t seed) {
  RngStream rng(seed);
  std::vector<bool> mask(static_cast<std::size_t>(height) *
                         static_cast<std::size_t>(width));
  for (std::size_t i = 0; i < mask.size(); ++i) {
    // |round(x)| >= 1  <=>  |x| >= 0.5 (round-half-away-from-zero).
    mask[i] = std::abs(std::round(rng.normal(0.0, sigma))) >= 1.0;
  }
  return mask;
}

GridMap generate_maze(const MazeGenConfig& cfg) {
  cfg.validate();
  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    auto mask = sample_obstacle_mask(
        cfg.height, cfg.width, cfg.sigma,
        derive_seed(cfg.seed, "attempt", static_cast<std::uint64_t>(attempt)));
    const auto flat = [&](Position p) {
      return static_cast<std::size_t>(p.row) * static_cast<std::size_t>(cfg.width) +
             static_cast<std::size_t>(p.col);
    };
    mask[flat(cfg.start)] = false;
    mask[flat(cfg.goal)] = false;
    GridMap grid(cfg.height, cfg.width, std::move(mask), cfg.start, cfg.goal);
    if (is_solvable(grid)) return grid;
  }
  throw MazeGenerationError("no solvable maze after " +
                            std::to_string(cfg.max_attempts) +
                            " attempts (sigma too large?)");
}

bool is_solvable(const GridMap& grid) {
  std::vector<bool> seen(grid.cell_count(), false);
  std::deque<Position> frontier{grid.start()};
  seen[grid.index_of(grid.start())] = true;
  while (!frontier.empty()) {
    const Position p = frontier.front();
    frontier.pop_front();
    if (p == grid.goal()) return true;
    for (const Move m : kAllMoves) {
      const Position q = neighbor(p, m);
      if (grid.is_free(q) && !seen[grid.index_of(q)]) {
        seen[grid.index_of(q)] = true;
        frontier.push_back(q);
      }
    }
  }
  return false;
}

std::string format_maze(const GridMap& grid) {
  std::string out;
  out += std::to_string(grid.height()) + " " + std::to_string(grid.width()) + "\n";
  out += std::to_string(grid.start().row) + " " + std::to_string(grid.start().col) +
         " " + std::to_string(grid.goal().row) + " " +
         std::to_string(grid.goal().col) + "\n";
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      const Position p{r, c};
      if (p == grid.start()) {
        out += 'S';
      } else if (p == grid.goal()) {
        out += 'G';
      } else {
        out += grid.is_obstacle(p) ? '#' : '.';
      }
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<int> parse_ints(std::string_view line, std::size_t expected,
                            int line_no) {
  std::vector<int> values;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p == end) break;
    int v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc()) {
      throw std::invalid_argument("maze line " + std::to_string(line_no) +
                                  ": expected an integer");
    }
    values.push_back(v);
    p = next;
  }
  if (values.size() != expected) {
    throw std::invalid_argument("maze line " + std::to_string(line_no) +
                                ": expected " + std::to_string(expected) +
                                " integers");
  }
  return values;
}

}  // namespace

GridMap parse_maze(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 2) throw std::invalid_argument("maze: missing header lines");
  const auto dims = parse_ints(lines[0], 2, 1);
  const auto ends = parse_ints(lines[1], 4, 2);
  const int height = dims[0];
  const int width = dims[1];
  if (height < 1 || width < 1) {
    throw std::invalid_argument("maze line 1: dimensions must be positive");
  }
  const Position start{ends[0], ends[1]};
  const Position goal{ends[2], ends[3]};
  if (lines.size() < static_cast<std::size_t>(height) + 2) {
    throw std::invalid_argument("maze: expected " + std::to_string(height) +
                                " grid rows");
  }
  for (std::size_t i = static_cast<std::size_t>(height) + 2; i < lines.size(); ++i) {
    if (!lines[i].empty()) {
      throw std::invalid_argument("maze line " + std::to_string(i + 1) +
                                  ": unexpected trailing content");
    }
  }
  std::vector<bool> mask(static_cast<std::size_t>(height) *
                         static_cast<std::size_t>(width));
  std::optional<Position> seen_start;
  std::optional<Position> seen_goal;
  for (int r = 0; r < height; ++r) {
    const std::string_view row = lines[static_cast<std::size_t>(r) + 2];
    const int line_no = r + 3;
    if (row.size() != static_cast<std::size_t>(width)) {
      throw std::invalid_argument("maze line " + std::to_string(line_no) +
                                  ": expected " + std::to_string(width) +
                                  " cells");
    }
    for (int c = 0; c < width; ++c) {
      const std::size_t idx =
          static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
          static_cast<std::size_t>(c);
      switch (row[static_cast<std::size_t>(c)]) {
        case '.':
          break;
        case '#':
          mask[idx] = true;
          break;
        case 'S':
          if (seen_start) {
            throw std::invalid_argument("maze line " + std::to_string(line_no) +
                                        ": second start marker");
          }
          seen_start = Position{r, c};
          break;
        case 'G':
          if (seen_goal) {
            throw std::invalid_argument("maze line " + std::to_string(line_no) +
                                        ": second goal marker");
          }
          seen_goal = Position{r, c};
          break;
        default:
          throw std::invalid_argument("maze line " + std::to_string(line_no) +
                                      ": invalid cell character");
      }
    }
  }
  if (seen_start != start) {
    throw std::invalid_argument("maze: S marker does not match the start coordinates");
  }
  if (seen_goal != goal) {
    throw std::invalid_argument("maze: G marker does not match the goal coordinates");
  }
  return GridMap(height, width, std::move(mask), start, goal);
}

GridMap read_maze_file(const std::filesystem::path& path) {
  return parse_maze(read_text_file(path));
}

}  // namespace dynah
