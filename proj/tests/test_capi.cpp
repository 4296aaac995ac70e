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


// Exercises the shared library through its C header only.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "dynah/dynah.h"

namespace {

constexpr char kCorridor[] = "1 4\n0 0 0 3\nS..G\n";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const char* name) {
  return std::string(DYNAH_TEST_TMPDIR) + "/capi_" + name;
}

}  // namespace

TEST_CASE("version and names") {
  CHECK(std::strlen(dynah_version()) > 0);
  CHECK(std::string(dynah_status_name(DYNAH_ERR_IO)).size() > 0);
  CHECK(std::string(dynah_agent_kind_name(DYNAH_AGENT_DYNAH)) == "dynah");
  dynah_agent_kind kind{};
  CHECK(dynah_parse_agent_kind("dynaq", &kind) == DYNAH_OK);
  CHECK(kind == DYNAH_AGENT_DYNAQ);
  CHECK(dynah_parse_agent_kind("sarsa", &kind) == DYNAH_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(dynah_last_error()) > 0);
}

TEST_CASE("defaults") {
  dynah_maze_config mc;
  dynah_maze_config_default(&mc);
  CHECK(mc.height == 39);
  CHECK(mc.width == 36);
  CHECK(mc.start_row == 1);
  CHECK(mc.start_col == 4);
  CHECK(mc.goal_row == 28);
  CHECK(mc.goal_col == 34);
  CHECK(mc.sigma == 0.3);
  dynah_agent_config ac;
  dynah_agent_config_default(&ac);
  CHECK(ac.alpha == 0.1);
  CHECK(ac.gamma == 0.95);
  CHECK(ac.epsilon == 0.1);
  CHECK(ac.planning_steps == 10);
  CHECK(ac.max_episode_steps == 10000);
}

TEST_CASE("null arguments are reported, not dereferenced") {
  CHECK(dynah_maze_generate(nullptr, nullptr) == DYNAH_ERR_INVALID_ARGUMENT);
  CHECK(dynah_maze_solve(nullptr, nullptr) == DYNAH_ERR_INVALID_ARGUMENT);
  CHECK(dynah_experiment_run(nullptr, nullptr) == DYNAH_ERR_INVALID_ARGUMENT);
  CHECK(dynah_maze_height(nullptr) == 0);
  CHECK(dynah_maze_is_solvable(nullptr) == -1);
  dynah_maze_free(nullptr);
  dynah_path_free(nullptr);
  dynah_result_free(nullptr);
  dynah_experiment_free(nullptr);
}

TEST_CASE("maze generate, format, parse, save, load") {
  dynah_maze_config mc;
  dynah_maze_config_default(&mc);
  mc.seed = 4;
  dynah_maze* maze = nullptr;
  REQUIRE(dynah_maze_generate(&mc, &maze) == DYNAH_OK);
  CHECK(dynah_maze_height(maze) == 39);
  CHECK(dynah_maze_width(maze) == 36);
  CHECK(dynah_maze_is_solvable(maze) == 1);
  CHECK(dynah_maze_is_obstacle(maze, 1, 4) == 0);
  CHECK(dynah_maze_is_obstacle(maze, 39, 0) == -1);

  size_t needed = 0;
  REQUIRE(dynah_maze_format(maze, nullptr, 0, &needed) == DYNAH_OK);
  std::string text(needed + 1, '\0');
  REQUIRE(dynah_maze_format(maze, text.data(), text.size(), &needed) == DYNAH_OK);
  text.resize(needed);

  dynah_maze* parsed = nullptr;
  REQUIRE(dynah_maze_parse(text.data(), text.size(), &parsed) == DYNAH_OK);
  const std::string path = temp_path("maze.txt");
  REQUIRE(dynah_maze_save(parsed, path.c_str()) == DYNAH_OK);
  CHECK(slurp(path) == text);
  dynah_maze* loaded = nullptr;
  REQUIRE(dynah_maze_load(path.c_str(), &loaded) == DYNAH_OK);
  int32_t r = -1;
  int32_t c = -1;
  dynah_maze_goal(loaded, &r, &c);
  CHECK(r == 28);
  CHECK(c == 34);
  std::remove(path.c_str());

  dynah_maze_free(loaded);
  dynah_maze_free(parsed);
  dynah_maze_free(maze);
}

TEST_CASE("maze error codes") {
  dynah_maze* maze = nullptr;
  CHECK(dynah_maze_parse("garbage", 7, &maze) == DYNAH_ERR_INVALID_ARGUMENT);
  CHECK(maze == nullptr);
  CHECK(dynah_maze_load("/nonexistent/dir/maze.txt", &maze) == DYNAH_ERR_IO);
  CHECK(std::strlen(dynah_last_error()) > 0);

  dynah_maze_config mc;
  dynah_maze_config_default(&mc);
  mc.sigma = 50.0;
  mc.max_attempts = 5;
  CHECK(dynah_maze_generate(&mc, &maze) == DYNAH_ERR_GENERATION);
  mc.sigma = -1.0;
  CHECK(dynah_maze_generate(&mc, &maze) == DYNAH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("solve a corridor") {
  dynah_maze* maze = nullptr;
  REQUIRE(dynah_maze_parse(kCorridor, sizeof(kCorridor) - 1, &maze) == DYNAH_OK);
  dynah_path* path = nullptr;
  REQUIRE(dynah_maze_solve(maze, &path) == DYNAH_OK);
  CHECK(dynah_path_found(path) == 1);
  CHECK(dynah_path_length(path) == 3);
  REQUIRE(dynah_path_cell_count(path) == 4);
  int32_t r = -1;
  int32_t c = -1;
  CHECK(dynah_path_cell(path, 2, &r, &c) == DYNAH_OK);
  CHECK(r == 0);
  CHECK(c == 2);
  CHECK(dynah_path_cell(path, 4, &r, &c) == DYNAH_ERR_OUT_OF_RANGE);
  dynah_path_free(path);
  dynah_maze_free(maze);
}

TEST_CASE("experiment round trip") {
  dynah_experiment* exp = nullptr;
  REQUIRE(dynah_experiment_create(&exp) == DYNAH_OK);
  dynah_maze_config mc;
  dynah_maze_config_default(&mc);
  mc.height = 8;
  mc.width = 8;
  mc.start_row = 0;
  mc.start_col = 0;
  mc.goal_row = 7;
  mc.goal_col = 7;
  REQUIRE(dynah_experiment_set_maze_config(exp, &mc) == DYNAH_OK);
  dynah_agent_config ac;
  dynah_agent_config_default(&ac);
  REQUIRE(dynah_experiment_set_agent(exp, DYNAH_AGENT_DYNAQ, &ac) == DYNAH_OK);
  REQUIRE(dynah_experiment_set_runs(exp, 3, 5) == DYNAH_OK);
  REQUIRE(dynah_experiment_set_seed(exp, 11) == DYNAH_OK);
  REQUIRE(dynah_experiment_set_jobs(exp, 2) == DYNAH_OK);
  CHECK(dynah_experiment_set_runs(exp, 0, 5) == DYNAH_ERR_INVALID_ARGUMENT);
  CHECK(dynah_experiment_set_heuristic(exp, "nope") == DYNAH_ERR_INVALID_ARGUMENT);

  dynah_result* a = nullptr;
  dynah_result* b = nullptr;
  REQUIRE(dynah_experiment_run(exp, &a) == DYNAH_OK);
  REQUIRE(dynah_experiment_run(exp, &b) == DYNAH_OK);
  CHECK(dynah_result_runs(a) == 3);
  CHECK(dynah_result_episodes(a) == 5);

  double sum = 0.0;
  for (int32_t run = 0; run < 3; ++run) {
    int32_t sa = 0;
    int32_t sb = 0;
    int capped = -1;
    REQUIRE(dynah_result_steps(a, run, 4, &sa, &capped) == DYNAH_OK);
    REQUIRE(dynah_result_steps(b, run, 4, &sb, nullptr) == DYNAH_OK);
    CHECK(sa == sb);
    CHECK(capped == 0);
    sum += sa;
    int32_t greedy = 0;
    int reached = 0;
    int32_t optimal = 0;
    int32_t capped_eps = 0;
    REQUIRE(dynah_result_run_summary(a, run, &greedy, &reached, &optimal, &capped_eps) ==
            DYNAH_OK);
    CHECK(greedy >= optimal);
    CHECK(optimal >= 14);
  }
  double mean = 0.0;
  REQUIRE(dynah_result_mean(a, 4, &mean) == DYNAH_OK);
  CHECK(mean == doctest::Approx(sum / 3.0));
  CHECK(dynah_result_final_mean(a) == mean);
  CHECK(dynah_result_steps(a, 3, 0, nullptr, nullptr) == DYNAH_ERR_OUT_OF_RANGE);
  CHECK(dynah_result_mean(a, 5, &mean) == DYNAH_ERR_OUT_OF_RANGE);

  const std::string csv = temp_path("curve.csv");
  const std::string summary = temp_path("summary.json");
  const std::string combined = temp_path("combined.json");
  REQUIRE(dynah_result_write_csv(a, csv.c_str(), 1) == DYNAH_OK);
  CHECK(slurp(csv).find("episode,mean,run_0,run_1,run_2,median") != std::string::npos);
  REQUIRE(dynah_result_write_summary(a, summary.c_str()) == DYNAH_OK);
  CHECK(slurp(summary).find("\"final_mean_steps\"") != std::string::npos);
  const dynah_result* both[] = {a, b};
  const char* labels[] = {"first", "second"};
  REQUIRE(dynah_results_write_combined_summary(both, labels, 2, combined.c_str()) == DYNAH_OK);
  CHECK(slurp(combined).find("\"second\"") != std::string::npos);
  CHECK(dynah_result_write_csv(a, "/nonexistent/dir/x.csv", 0) == DYNAH_ERR_IO);
  std::remove(csv.c_str());
  std::remove(summary.c_str());
  std::remove(combined.c_str());

  dynah_result_free(a);
  dynah_result_free(b);
  dynah_experiment_free(exp);
}

TEST_CASE("fixed maze through the C API") {
  dynah_maze* maze = nullptr;
  REQUIRE(dynah_maze_parse(kCorridor, sizeof(kCorridor) - 1, &maze) == DYNAH_OK);
  dynah_experiment* exp = nullptr;
  REQUIRE(dynah_experiment_create(&exp) == DYNAH_OK);
  REQUIRE(dynah_experiment_set_fixed_maze(exp, maze) == DYNAH_OK);
  dynah_maze_free(maze);  // the experiment holds its own copy
  REQUIRE(dynah_experiment_set_runs(exp, 2, 3) == DYNAH_OK);
  dynah_result* result = nullptr;
  REQUIRE(dynah_experiment_run(exp, &result) == DYNAH_OK);
  int32_t optimal = 0;
  REQUIRE(dynah_result_run_summary(result, 1, nullptr, nullptr, &optimal, nullptr) == DYNAH_OK);
  CHECK(optimal == 3);
  dynah_result_free(result);
  dynah_experiment_free(exp);
}
