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


#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "dynah/experiment.hpp"
#include "json.hpp"

namespace dynah {
namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.maze.height = 8;
  cfg.maze.width = 8;
  cfg.maze.start = {0, 0};
  cfg.maze.goal = {7, 7};
  cfg.runs = 4;
  cfg.episodes = 20;
  cfg.master_seed = 9;
  return cfg;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("smallest instance: 2x2 open grid, one run, one episode") {
  ExperimentConfig cfg;
  cfg.fixed_maze = GridMap::open(2, 2, {0, 0}, {1, 1});
  cfg.runs = 1;
  cfg.episodes = 1;
  const ExperimentResult result = run_experiment(cfg);
  REQUIRE(result.curve.runs() == 1);
  REQUIRE(result.curve.episodes() == 1);
  CHECK(result.curve.steps[0][0] >= 2);
  CHECK(result.summary.runs[0].optimal_length == 2);
  CHECK(result.summary.final_mean_steps == result.curve.steps[0][0]);
}

TEST_CASE("run_experiment is deterministic and independent of the worker count") {
  ExperimentConfig cfg = small_config();
  const ExperimentResult a = run_experiment(cfg);
  const ExperimentResult b = run_experiment(cfg);
  cfg.jobs = 3;
  const ExperimentResult c = run_experiment(cfg);
  CHECK(a.curve == b.curve);
  CHECK(a.summary == b.summary);
  CHECK(a.curve == c.curve);
  CHECK(a.summary == c.summary);
}

TEST_CASE("curve mean is the per-episode average over runs") {
  const ExperimentResult result = run_experiment(small_config());
  for (int e = 0; e < result.curve.episodes(); ++e) {
    double sum = 0.0;
    for (int r = 0; r < result.curve.runs(); ++r) sum += result.curve.steps[r][e];
    CHECK(result.curve.mean[e] == doctest::Approx(sum / result.curve.runs()));
  }
  CHECK(result.summary.final_mean_steps == result.curve.mean.back());
}

TEST_CASE("seeds depend on the run index only") {
  ExperimentConfig cfg = small_config();
  std::vector<std::vector<RunRecord>> records;
  for (const auto kind : {AgentKind::kQLearning, AgentKind::kDynaQ, AgentKind::kDynaH}) {
    for (const int n : {1, 10}) {
      cfg.agent = kind;
      cfg.agent_cfg.planning_steps = n;
      records.push_back(run_experiment(cfg).summary.runs);
    }
  }
  for (const auto& runs : records) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      CHECK(runs[i].maze_seed == records[0][i].maze_seed);
      CHECK(runs[i].agent_seed == records[0][i].agent_seed);
      CHECK(runs[i].obstacle_count == records[0][i].obstacle_count);
      CHECK(runs[i].optimal_length == records[0][i].optimal_length);
    }
  }
  CHECK(maze_seed_for_run(9, 0) != maze_seed_for_run(9, 1));
  CHECK(maze_seed_for_run(9, 0) != agent_seed_for_run(9, 0));
}

TEST_CASE("sweep with N=0 for Dyna-Q reproduces Q-learning") {
  ExperimentConfig cfg = small_config();
  cfg.agent = AgentKind::kDynaQ;
  const auto sweep = sweep_planning_steps(cfg, {0});
  cfg.agent = AgentKind::kQLearning;
  const ExperimentResult q = run_experiment(cfg);
  CHECK(sweep.at(0).curve == q.curve);
  CHECK(sweep.at(0).summary == q.summary);
}

TEST_CASE("sweep rejects bad values") {
  CHECK_THROWS_AS(sweep_planning_steps(small_config(), {}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_planning_steps(small_config(), {5, -1}), std::invalid_argument);
}

TEST_CASE("compare with a single episode yields three one-point curves") {
  ExperimentConfig cfg = small_config();
  cfg.episodes = 1;
  const auto results = compare_algorithms(cfg);
  REQUIRE(results.size() == 3);
  for (const auto& [kind, result] : results) {
    CHECK(result.config.agent == kind);
    CHECK(result.curve.episodes() == 1);
    CHECK(result.curve.mean.size() == 1);
  }
}

TEST_CASE("planning helps: Dyna-Q N=10 beats N=0 by episode 50") {
  ExperimentConfig cfg = small_config();
  cfg.maze.height = 15;
  cfg.maze.width = 15;
  cfg.maze.goal = {14, 14};
  cfg.runs = 10;
  cfg.episodes = 50;
  cfg.agent = AgentKind::kDynaQ;
  const auto sweep = sweep_planning_steps(cfg, {0, 10});
  double early0 = 0.0;
  double early10 = 0.0;
  for (int e = 0; e < 50; ++e) {
    early0 += sweep.at(0).curve.mean[e];
    early10 += sweep.at(10).curve.mean[e];
  }
  CHECK(early10 < early0);
}

TEST_CASE("greedy rollouts never beat the optimum") {
  const ExperimentResult result = run_experiment(small_config());
  for (const RunRecord& r : result.summary.runs) {
    CHECK(r.greedy_length >= r.optimal_length);
    if (!r.greedy_reached_goal) {
      CHECK(r.greedy_length == result.config.agent_cfg.max_episode_steps);
    }
  }
}

TEST_CASE("a fixed maze is used for every run") {
  ExperimentConfig cfg = small_config();
  cfg.fixed_maze = GridMap::open(4, 4, {0, 0}, {3, 3});
  const ExperimentResult result = run_experiment(cfg);
  for (const RunRecord& r : result.summary.runs) {
    CHECK(r.obstacle_count == 0);
    CHECK(r.optimal_length == 6);
  }
}

TEST_CASE("invalid configs are rejected") {
  ExperimentConfig cfg = small_config();
  cfg.runs = 0;
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.heuristic = "nope";
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.agent_cfg.gamma = 1.0;
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.fixed_maze = parse_maze("2 2\n0 0 1 1\nS#\n#G\n");
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}

TEST_CASE("CSV layout") {
  const ExperimentResult result = run_experiment(small_config());
  const auto lines = lines_of(curve_csv(result));
  REQUIRE(lines.size() == 2 + 20);
  CHECK(lines[0].rfind("# config {", 0) == 0);
  CHECK(lines[1] == "episode,mean,run_0,run_1,run_2,run_3");
  CHECK(lines[2].rfind("1,", 0) == 0);
  CHECK(lines.back().rfind("20,", 0) == 0);
  const auto config = nlohmann::json::parse(lines[0].substr(9));
  CHECK(config["master_seed"] == 9);
  CHECK(config["agent"]["kind"] == "dynah");
  CHECK(config["agent"]["heuristic"] == "euclidean-squared");

  const auto with_stats = lines_of(curve_csv(result, true));
  CHECK(with_stats[1] == "episode,mean,run_0,run_1,run_2,run_3,median,ci95_low,ci95_high");
}

TEST_CASE("CSV of an exact mean prints without noise") {
  ExperimentConfig cfg;
  cfg.fixed_maze = parse_maze("1 4\n0 0 0 3\nS..G\n");
  cfg.runs = 2;
  cfg.episodes = 1;
  cfg.agent_cfg.epsilon = 0.0;
  const auto lines = lines_of(curve_csv(run_experiment(cfg)));
  // Zero-initialized Q with epsilon 0: ties everywhere, but the corridor is short.
  const ExperimentResult result = run_experiment(cfg);
  std::ostringstream expected;
  expected << "1," << (result.curve.steps[0][0] + result.curve.steps[1][0]) / 2.0 << ","
           << result.curve.steps[0][0] << "," << result.curve.steps[1][0];
  CHECK(lines[2] == expected.str());
}

TEST_CASE("summary JSON parses and carries per-run records") {
  const ExperimentResult result = run_experiment(small_config());
  const auto doc = nlohmann::json::parse(summary_json(result));
  CHECK(doc["config"]["runs"] == 4);
  CHECK(doc["final_mean_steps"].get<double>() == result.summary.final_mean_steps);
  REQUIRE(doc["runs"].size() == 4);
  CHECK(doc["runs"][1]["maze_seed"].get<std::uint64_t>() == maze_seed_for_run(9, 1));

  const auto combined = nlohmann::json::parse(
      combined_summary_json({"a", "b"}, {&result, &result}));
  CHECK(combined.contains("a"));
  CHECK(combined.contains("b"));
  CHECK_THROWS_AS(combined_summary_json({"a"}, {}), std::invalid_argument);
}

}  // namespace dynah
