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

// Multi-run learning-curve experiments.
//
// Run i trains on the maze seeded by derive_seed(master, "maze", i) and draws
// agent randomness from derive_seed(master, "agent", i). Neither seed depends
// on the agent kind or its parameters, so every algorithm and every planning
// budget sees the same mazes and the same random stream. Q and the model
// persist across the episodes of a run and are reset between runs.

#ifndef DYNAH_EXPERIMENT_HPP_
#define DYNAH_EXPERIMENT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynah/agent.hpp"
#include "dynah/gridworld.hpp"

namespace dynah {

struct ExperimentConfig {
  MazeGenConfig maze;  // `maze.seed` is ignored; per-run seeds are derived
  int runs = 30;
  int episodes = 100;
  AgentKind agent = AgentKind::kDynaH;
  AgentConfig agent_cfg;
  std::string heuristic = "euclidean-squared";
  std::uint64_t master_seed = 0;
  std::optional<GridMap> fixed_maze;  // every run uses this maze if set
  int jobs = 1;

  void validate() const;
};

std::uint64_t maze_seed_for_run(std::uint64_t master_seed, int run);
std::uint64_t agent_seed_for_run(std::uint64_t master_seed, int run);

struct LearningCurve {
  std::vector<std::vector<int>> steps;    // [run][episode]
  std::vector<std::vector<bool>> capped;  // [run][episode]
  std::vector<double> mean;               // [episode]

  int runs() const { return static_cast<int>(steps.size()); }
  int episodes() const { return steps.empty() ? 0 : static_cast<int>(steps[0].size()); }

  friend bool operator==(const LearningCurve&, const LearningCurve&) = default;
};

/// Arithmetic mean of each episode column, summed in run order.
std::vector<double> episode_means(const std::vector<std::vector<int>>& steps);

struct RunRecord {
  std::uint64_t maze_seed = 0;
  std::uint64_t agent_seed = 0;
  int greedy_length = 0;
  bool greedy_reached_goal = false;
  int optimal_length = 0;
  int capped_episodes = 0;
  int obstacle_count = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct RunSummary {
  double final_mean_steps = 0.0;
  std::vector<RunRecord> runs;

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

struct ExperimentResult {
  ExperimentConfig config;
  LearningCurve curve;
  RunSummary summary;
};

/// Output is a pure function of `cfg`, independent of cfg.jobs.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// One experiment per planning budget, same mazes and seeds for each.
std::map<int, ExperimentResult> sweep_planning_steps(const ExperimentConfig& cfg,
                                                     const std::vector<int>& values);

/// Q-learning, Dyna-Q and Dyna-H on the same mazes; both Dyna agents use
/// cfg.agent_cfg.planning_steps.
std::map<AgentKind, ExperimentResult> compare_algorithms(const ExperimentConfig& cfg);

/// `episode,mean,run_0,...` CSV, preceded by `#` lines echoing the resolved
/// configuration. With `with_stats`, median and a normal-approximation 95%
/// band of the mean are appended as extra columns.
std::string curve_csv(const ExperimentResult& result, bool with_stats = false);

/// JSON summary of one experiment: resolved config, derived seeds, per-run
/// greedy and optimal lengths, capped-episode counts.
std::string summary_json(const ExperimentResult& result);

/// JSON object keyed by `labels`, one summary per entry.
std::string combined_summary_json(const std::vector<std::string>& labels,
                                  const std::vector<const ExperimentResult*>& results);

}  // namespace dynah

#endif  // DYNAH_EXPERIMENT_HPP_
