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

#include "dynah/agent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dynah {

std::string_view agent_kind_name(AgentKind kind) {
  switch (kind) {
    case AgentKind::kQLearning:
      return "qlearning";
    case AgentKind::kDynaQ:
      return "dynaq";
    case AgentKind::kDynaH:
      return "dynah";
  }
  return "?";
}

std::optional<AgentKind> parse_agent_kind(std::string_view name) {
  for (const auto kind : {AgentKind::kQLearning, AgentKind::kDynaQ, AgentKind::kDynaH}) {
    if (agent_kind_name(kind) == name) return kind;
  }
  return std::nullopt;
}

void AgentConfig::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must be in (0, 1]");
  }
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("gamma must be in [0, 1)");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must be in [0, 1]");
  }
  if (planning_steps < 0) {
    throw std::invalid_argument("planning_steps must be non-negative");
  }
  if (max_episode_steps < 1) {
    throw std::invalid_argument("max_episode_steps must be positive");
  }
}

Move epsilon_greedy(const QTable& q, Position s, std::span<const Move> legal,
                    double epsilon, RngStream& rng) {
  if (legal.empty()) throw std::invalid_argument("epsilon_greedy: no legal moves");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon_greedy: epsilon must be in [0, 1]");
  }
  if (rng.uniform_real() < epsilon) {
    return legal[rng.uniform_index(legal.size())];
  }
  double best = q.value(s, legal[0]);
  for (const Move m : legal) best = std::max(best, q.value(s, m));
  std::size_t tie_count = 0;
  for (const Move m : legal) tie_count += q.value(s, m) == best ? 1 : 0;
  std::size_t pick = tie_count == 1 ? 0 : rng.uniform_index(tie_count);
  for (const Move m : legal) {
    if (q.value(s, m) == best && pick-- == 0) return m;
  }
  return legal[0];  // unreachable
}

void td_update(QTable& q, Position s, Move a, double r, Position s_next,
               bool terminal, double alpha, double gamma) {
  if (!std::isfinite(r)) throw std::invalid_argument("td_update: non-finite reward");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("td_update: alpha must be in [0, 1]");
  }
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("td_update: gamma must be in [0, 1)");
  }
  const double bootstrap = terminal ? 0.0 : q.max_value(s_next);
  const double current = q.value(s, a);
  q.set(s, a, current + alpha * (r + gamma * bootstrap - current));
}

namespace {

void replay(QTable& q, const LearnedModel& model, Position s, Move a,
            const AgentConfig& cfg, const PlanningObserver& observer,
            Transition& outcome) {
  // Callers only pass keys that are in the model.
  outcome = *model.query(s, a);
  if (observer) observer(s, a, outcome);
  td_update(q, s, a, outcome.reward, outcome.next, outcome.terminal, cfg.alpha,
            cfg.gamma);
}

}  // namespace

void dyna_q_plan(QTable& q, const LearnedModel& model, const AgentConfig& cfg,
                 RngStream& rng, const PlanningObserver& observer) {
  if (model.empty()) return;
  Transition outcome;
  for (int i = 0; i < cfg.planning_steps; ++i) {
    const auto [s, a] = model.sample_observed(rng);
    replay(q, model, s, a, cfg, observer, outcome);
  }
}

void dyna_h_plan(QTable& q, const LearnedModel& model, const Heuristic& h,
                 Position cursor, Position goal, const AgentConfig& cfg,
                 RngStream& rng, const PlanningObserver& observer) {
  if (model.empty()) return;
  Transition outcome;
  for (int i = 0; i < cfg.planning_steps; ++i) {
    Position s = cursor;
    std::optional<Move> a = heuristic_action(s, h, model, goal, rng);
    if (!a) {
      const auto jump = model.sample_observed(rng);
      s = jump.first;
      a = jump.second;
    }
    replay(q, model, s, *a, cfg, observer, outcome);
    cursor = outcome.next;
  }
}

EpisodeResult run_episode(AgentKind kind, const GridMap& grid, QTable& q,
                          LearnedModel& model, const Heuristic* h,
                          const AgentConfig& cfg, RngStream& rng) {
  cfg.validate();
  if (kind == AgentKind::kDynaH && h == nullptr) {
    throw std::invalid_argument("run_episode: Dyna-H needs a heuristic");
  }
  Position s = grid.start();
  EpisodeResult result;
  while (result.steps < cfg.max_episode_steps) {
    const Move a = epsilon_greedy(q, s, kAllMoves, cfg.epsilon, rng);
    const StepOutcome out = step(grid, s, a);
    ++result.steps;
    td_update(q, s, a, out.reward, out.next, out.terminal, cfg.alpha, cfg.gamma);
    switch (kind) {
      case AgentKind::kQLearning:
        break;
      case AgentKind::kDynaQ:
        model.record(s, a, {out.next, out.reward, out.terminal});
        dyna_q_plan(q, model, cfg, rng);
        break;
      case AgentKind::kDynaH:
        model.record(s, a, {out.next, out.reward, out.terminal});
        // The simulated trajectory starts from the state the real move was
        // taken in.
        dyna_h_plan(q, model, *h, s, grid.goal(), cfg, rng);
        break;
    }
    if (out.terminal) return result;
    s = out.next;
  }
  result.capped = true;
  return result;
}

RolloutResult greedy_rollout(const GridMap& grid, const QTable& q, int max_steps,
                             RngStream& rng) {
  RolloutResult result;
  std::vector<bool> visited(grid.cell_count(), false);
  Position s = grid.start();
  result.path.push_back(s);
  visited[grid.index_of(s)] = true;
  for (int i = 0; i < max_steps; ++i) {
    const Move a = epsilon_greedy(q, s, kAllMoves, 0.0, rng);
    const StepOutcome out = step(grid, s, a);
    result.path.push_back(out.next);
    if (out.terminal) {
      result.length = i + 1;
      result.reached_goal = true;
      return result;
    }
    if (visited[grid.index_of(out.next)]) break;
    visited[grid.index_of(out.next)] = true;
    s = out.next;
  }
  result.length = max_steps;
  return result;
}

}  // namespace dynah
