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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dynah/experiment.hpp"
#include "dynah/io.hpp"
#include "json.hpp"

namespace dynah {

namespace {

using Json = nlohmann::ordered_json;

Json position_json(Position p) { return Json::array({p.row, p.col}); }

Json config_json(const ExperimentConfig& cfg) {
  Json agent{
      {"kind", agent_kind_name(cfg.agent)},
      {"alpha", cfg.agent_cfg.alpha},
      {"gamma", cfg.agent_cfg.gamma},
      {"epsilon", cfg.agent_cfg.epsilon},
      {"planning_steps", cfg.agent_cfg.planning_steps},
      {"max_episode_steps", cfg.agent_cfg.max_episode_steps},
  };
  if (cfg.agent == AgentKind::kDynaH) agent["heuristic"] = cfg.heuristic;

  Json maze;
  if (cfg.fixed_maze) {
    maze = {
        {"source", "fixed"},
        {"height", cfg.fixed_maze->height()},
        {"width", cfg.fixed_maze->width()},
        {"start", position_json(cfg.fixed_maze->start())},
        {"goal", position_json(cfg.fixed_maze->goal())},
    };
  } else {
    maze = {
        {"source", "generated"},
        {"height", cfg.maze.height},
        {"width", cfg.maze.width},
        {"start", position_json(cfg.maze.start)},
        {"goal", position_json(cfg.maze.goal)},
        {"sigma", cfg.maze.sigma},
        {"max_attempts", cfg.maze.max_attempts},
    };
  }
  return {
      {"master_seed", cfg.master_seed},
      {"runs", cfg.runs},
      {"episodes", cfg.episodes},
      {"jobs", cfg.jobs},
      {"maze", std::move(maze)},
      {"agent", std::move(agent)},
  };
}

Json summary_object(const ExperimentResult& result) {
  Json runs = Json::array();
  for (std::size_t i = 0; i < result.summary.runs.size(); ++i) {
    const RunRecord& r = result.summary.runs[i];
    runs.push_back({
        {"run", i},
        {"maze_seed", r.maze_seed},
        {"agent_seed", r.agent_seed},
        {"obstacles", r.obstacle_count},
        {"optimal_length", r.optimal_length},
        {"greedy_length", r.greedy_length},
        {"greedy_reached_goal", r.greedy_reached_goal},
        {"capped_episodes", r.capped_episodes},
    });
  }
  return {
      {"config", config_json(result.config)},
      {"final_mean_steps", result.summary.final_mean_steps},
      {"runs", std::move(runs)},
  };
}

double median(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (static_cast<double>(values[n / 2 - 1]) + values[n / 2]);
}

}  // namespace

std::string curve_csv(const ExperimentResult& result, bool with_stats) {
  const LearningCurve& curve = result.curve;
  std::string out = "# config " + config_json(result.config).dump() + "\n";
  out += "episode,mean";
  for (int r = 0; r < curve.runs(); ++r) out += ",run_" + std::to_string(r);
  if (with_stats) out += ",median,ci95_low,ci95_high";
  out += '\n';
  for (int e = 0; e < curve.episodes(); ++e) {
    const auto ei = static_cast<std::size_t>(e);
    out += std::to_string(e + 1);
    out += ',';
    out += format_g17(curve.mean[ei]);
    std::vector<int> column;
    for (const auto& run : curve.steps) {
      out += ',';
      out += format_g17(run[ei]);
      column.push_back(run[ei]);
    }
    if (with_stats) {
      double var = 0.0;
      for (const int v : column) var += (v - curve.mean[ei]) * (v - curve.mean[ei]);
      const double n = static_cast<double>(column.size());
      const double half =
          column.size() > 1 ? 1.96 * std::sqrt(var / (n - 1.0)) / std::sqrt(n) : 0.0;
      out += ',' + format_g17(median(column));
      out += ',' + format_g17(curve.mean[ei] - half);
      out += ',' + format_g17(curve.mean[ei] + half);
    }
    out += '\n';
  }
  return out;
}

std::string summary_json(const ExperimentResult& result) {
  return summary_object(result).dump(2) + "\n";
}

std::string combined_summary_json(const std::vector<std::string>& labels,
                                  const std::vector<const ExperimentResult*>& results) {
  if (labels.size() != results.size()) {
    throw std::invalid_argument("combined summary: label/result count mismatch");
  }
  Json all = Json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    all[labels[i]] = summary_object(*results[i]);
  }
  return all.dump(2) + "\n";
}

}  // namespace dynah
