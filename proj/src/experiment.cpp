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

#include "dynah/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "dynah/astar.hpp"
#include "dynah/heuristics.hpp"
#include "dynah/rng.hpp"

namespace dynah {

void ExperimentConfig::validate() const {
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");
  if (episodes < 1) throw std::invalid_argument("episodes must be at least 1");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  agent_cfg.validate();
  if (fixed_maze) {
    if (!is_solvable(*fixed_maze)) {
      throw std::invalid_argument("the fixed maze has no path from start to goal");
    }
  } else {
    maze.validate();
  }
  if (agent == AgentKind::kDynaH) make_heuristic(heuristic);
}

std::uint64_t maze_seed_for_run(std::uint64_t master_seed, int run) {
  return derive_seed(master_seed, "maze", static_cast<std::uint64_t>(run));
}

std::uint64_t agent_seed_for_run(std::uint64_t master_seed, int run) {
  return derive_seed(master_seed, "agent", static_cast<std::uint64_t>(run));
}

std::vector<double> episode_means(const std::vector<std::vector<int>>& steps) {
  if (steps.empty()) return {};
  std::vector<double> mean(steps[0].size(), 0.0);
  for (std::size_t e = 0; e < mean.size(); ++e) {
    double sum = 0.0;
    for (const auto& run : steps) sum += run[e];
    mean[e] = sum / static_cast<double>(steps.size());
  }
  return mean;
}

namespace {

struct RunOutput {
  std::vector<int> steps;
  std::vector<bool> capped;
  RunRecord record;
};

RunOutput execute_run(const ExperimentConfig& cfg, const Heuristic* h, int run) {
  RunOutput out;
  out.record.maze_seed = maze_seed_for_run(cfg.master_seed, run);
  out.record.agent_seed = agent_seed_for_run(cfg.master_seed, run);

  GridMap grid = [&] {
    if (cfg.fixed_maze) return *cfg.fixed_maze;
    MazeGenConfig maze_cfg = cfg.maze;
    maze_cfg.seed = out.record.maze_seed;
    return generate_maze(maze_cfg);
  }();
  out.record.obstacle_count = static_cast<int>(grid.obstacle_count());

  QTable q(grid);
  LearnedModel model(grid);
  RngStream rng(out.record.agent_seed);
  out.steps.reserve(static_cast<std::size_t>(cfg.episodes));
  out.capped.reserve(static_cast<std::size_t>(cfg.episodes));
  for (int e = 0; e < cfg.episodes; ++e) {
    const EpisodeResult ep = run_episode(cfg.agent, grid, q, model, h, cfg.agent_cfg, rng);
    out.steps.push_back(ep.steps);
    out.capped.push_back(ep.capped);
    if (ep.capped) ++out.record.capped_episodes;
  }

  const RolloutResult greedy =
      greedy_rollout(grid, q, cfg.agent_cfg.max_episode_steps, rng);
  out.record.greedy_length = greedy.length;
  out.record.greedy_reached_goal = greedy.reached_goal;
  out.record.optimal_length = astar_shortest(grid).length;
  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::shared_ptr<const Heuristic> heuristic;
  if (cfg.agent == AgentKind::kDynaH) heuristic = make_heuristic(cfg.heuristic);

  const auto runs = static_cast<std::size_t>(cfg.runs);
  std::vector<RunOutput> outputs(runs);
  std::vector<std::exception_ptr> errors(runs);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < runs; i = next++) {
      try {
        outputs[i] = execute_run(cfg, heuristic.get(), static_cast<int>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), runs);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  ExperimentResult result;
  result.config = cfg;
  for (auto& out : outputs) {
    result.curve.steps.push_back(std::move(out.steps));
    result.curve.capped.push_back(std::move(out.capped));
    result.summary.runs.push_back(out.record);
  }
  result.curve.mean = episode_means(result.curve.steps);
  result.summary.final_mean_steps = result.curve.mean.back();
  return result;
}

std::map<int, ExperimentResult> sweep_planning_steps(const ExperimentConfig& cfg,
                                                     const std::vector<int>& values) {
  if (values.empty()) throw std::invalid_argument("sweep: no planning-step values");
  for (const int n : values) {
    if (n < 0) throw std::invalid_argument("sweep: planning steps must be non-negative");
  }
  std::map<int, ExperimentResult> results;
  for (const int n : values) {
    if (results.contains(n)) continue;
    ExperimentConfig variant = cfg;
    variant.agent_cfg.planning_steps = n;
    results.emplace(n, run_experiment(variant));
  }
  return results;
}

std::map<AgentKind, ExperimentResult> compare_algorithms(const ExperimentConfig& cfg) {
  std::map<AgentKind, ExperimentResult> results;
  for (const auto kind : {AgentKind::kQLearning, AgentKind::kDynaQ, AgentKind::kDynaH}) {
    ExperimentConfig variant = cfg;
    variant.agent = kind;
    results.emplace(kind, run_experiment(variant));
  }
  return results;
}

}  // namespace dynah
