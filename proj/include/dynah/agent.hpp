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

// Tabular agents: one-step Q-learning, Dyna-Q (uniform replay of modeled
// transitions) and Dyna-H (replay that follows the worst modeled move
// under a heuristic).
//
// Randomness is consumed in a fixed order within each real step: the
// epsilon-greedy draws, then any tie-break draws, then planning draws.
// Q-learning and Dyna-Q with zero planning steps therefore consume the
// stream identically.

#ifndef DYNAH_AGENT_HPP_
#define DYNAH_AGENT_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dynah/gridworld.hpp"
#include "dynah/heuristics.hpp"
#include "dynah/learned_model.hpp"
#include "dynah/q_table.hpp"
#include "dynah/rng.hpp"

namespace dynah {

enum class AgentKind { kQLearning, kDynaQ, kDynaH };

std::string_view agent_kind_name(AgentKind kind);
std::optional<AgentKind> parse_agent_kind(std::string_view name);

struct AgentConfig {
  double alpha = 0.1;
  double gamma = 0.95;
  double epsilon = 0.1;
  int planning_steps = 10;
  int max_episode_steps = 10000;

  /// Throws std::invalid_argument naming the first violated bound.
  void validate() const;
};

/// Random legal move with probability `epsilon`, otherwise a greedy move
/// with uniform tie-breaking. Throws std::invalid_argument if `legal` is
/// empty or epsilon is outside [0, 1].
Move epsilon_greedy(const QTable& q, Position s, std::span<const Move> legal,
                    double epsilon, RngStream& rng);

/// Q(s,a) += alpha * (r + gamma * max_a' Q(s',a') - Q(s,a)); the bootstrap
/// term is zero when `terminal`. Throws std::invalid_argument for non-finite
/// `r` or alpha/gamma outside [0, 1].
void td_update(QTable& q, Position s, Move a, double r, Position s_next,
               bool terminal, double alpha, double gamma);

/// Called for each simulated transition a planner replays.
using PlanningObserver =
    std::function<void(Position s, Move a, const Transition& outcome)>;

/// cfg.planning_steps uniform replays of observed pairs. No-op on an empty
/// model.
void dyna_q_plan(QTable& q, const LearnedModel& model, const AgentConfig& cfg,
                 RngStream& rng, const PlanningObserver& observer = {});

/// cfg.planning_steps replays along a simulated trajectory that starts at
/// `cursor` and always takes the worst modeled move. When the cursor state
/// has no modeled moves the trajectory jumps to a uniformly sampled observed
/// pair. No-op on an empty model.
void dyna_h_plan(QTable& q, const LearnedModel& model, const Heuristic& h,
                 Position cursor, Position goal, const AgentConfig& cfg,
                 RngStream& rng, const PlanningObserver& observer = {});

struct EpisodeResult {
  int steps = 0;
  bool capped = false;
};

/// One real episode from grid.start(). The Q-learning agent never touches
/// `model`. Dyna-H requires `h`. Hitting cfg.max_episode_steps ends the
/// episode with `capped` set.
EpisodeResult run_episode(AgentKind kind, const GridMap& grid, QTable& q,
                          LearnedModel& model, const Heuristic* h,
                          const AgentConfig& cfg, RngStream& rng);

struct RolloutResult {
  int length = 0;
  bool reached_goal = false;
  std::vector<Position> path;
};

/// Greedy (epsilon = 0) walk from the start with no learning. Stops at the
/// goal, on revisiting a cell, or after `max_steps` moves; the latter two
/// leave reached_goal false and report length = max_steps.
RolloutResult greedy_rollout(const GridMap& grid, const QTable& q, int max_steps,
                             RngStream& rng);

}  // namespace dynah

#endif  // DYNAH_AGENT_HPP_
