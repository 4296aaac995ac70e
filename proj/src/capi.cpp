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

#include "dynah/dynah.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "dynah/astar.hpp"
#include "dynah/experiment.hpp"
#include "dynah/gridworld.hpp"
#include "dynah/heuristics.hpp"
#include "dynah/io.hpp"

struct dynah_maze {
  dynah::GridMap grid;
};

struct dynah_path {
  dynah::PathResult result;
};

struct dynah_experiment {
  dynah::ExperimentConfig config;
};

struct dynah_result {
  dynah::ExperimentResult result;
};

namespace {

thread_local std::string last_error;

dynah_status fail(dynah_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Maps the library's exceptions onto status codes.
template <typename Fn>
dynah_status guarded(Fn&& fn) {
  try {
    fn();
    return DYNAH_OK;
  } catch (const dynah::MazeGenerationError& e) {
    return fail(DYNAH_ERR_GENERATION, e.what());
  } catch (const dynah::IoError& e) {
    return fail(DYNAH_ERR_IO, e.what());
  } catch (const std::out_of_range& e) {
    return fail(DYNAH_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DYNAH_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DYNAH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DYNAH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DYNAH_ERR_INTERNAL, "unknown error");
  }
}

#define DYNAH_REQUIRE(ptr)                                                 \
  do {                                                                     \
    if ((ptr) == nullptr) {                                                \
      return fail(DYNAH_ERR_INVALID_ARGUMENT, #ptr " must not be null");   \
    }                                                                      \
  } while (0)

dynah::MazeGenConfig to_cpp(const dynah_maze_config& c) {
  dynah::MazeGenConfig cfg;
  cfg.height = c.height;
  cfg.width = c.width;
  cfg.start = {c.start_row, c.start_col};
  cfg.goal = {c.goal_row, c.goal_col};
  cfg.sigma = c.sigma;
  cfg.seed = c.seed;
  cfg.max_attempts = c.max_attempts;
  return cfg;
}

dynah::AgentConfig to_cpp(const dynah_agent_config& c) {
  dynah::AgentConfig cfg;
  cfg.alpha = c.alpha;
  cfg.gamma = c.gamma;
  cfg.epsilon = c.epsilon;
  cfg.planning_steps = c.planning_steps;
  cfg.max_episode_steps = c.max_episode_steps;
  return cfg;
}

dynah::AgentKind to_cpp(dynah_agent_kind kind) {
  switch (kind) {
    case DYNAH_AGENT_QLEARNING:
      return dynah::AgentKind::kQLearning;
    case DYNAH_AGENT_DYNAQ:
      return dynah::AgentKind::kDynaQ;
    case DYNAH_AGENT_DYNAH:
      return dynah::AgentKind::kDynaH;
  }
  throw std::invalid_argument("unknown agent kind");
}

const dynah::LearningCurve& curve(const dynah_result* r) { return r->result.curve; }

void check_run_episode(const dynah_result* r, int32_t run, int32_t episode) {
  if (run < 0 || run >= curve(r).runs()) throw std::out_of_range("run index out of range");
  if (episode < 0 || episode >= curve(r).episodes()) {
    throw std::out_of_range("episode index out of range");
  }
}

}  // namespace

extern "C" {

const char* dynah_version(void) { return "1.0.0"; }

const char* dynah_last_error(void) { return last_error.c_str(); }

const char* dynah_status_name(dynah_status status) {
  switch (status) {
    case DYNAH_OK:
      return "ok";
    case DYNAH_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case DYNAH_ERR_IO:
      return "i/o error";
    case DYNAH_ERR_GENERATION:
      return "maze generation failed";
    case DYNAH_ERR_OUT_OF_RANGE:
      return "out of range";
    case DYNAH_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* dynah_agent_kind_name(dynah_agent_kind kind) {
  switch (kind) {
    case DYNAH_AGENT_QLEARNING:
      return "qlearning";
    case DYNAH_AGENT_DYNAQ:
      return "dynaq";
    case DYNAH_AGENT_DYNAH:
      return "dynah";
  }
  return "unknown";
}

dynah_status dynah_parse_agent_kind(const char* name, dynah_agent_kind* out) {
  DYNAH_REQUIRE(name);
  DYNAH_REQUIRE(out);
  const auto kind = dynah::parse_agent_kind(name);
  if (!kind) {
    return fail(DYNAH_ERR_INVALID_ARGUMENT, std::string("unknown agent kind '") + name +
                                                "' (expected qlearning, dynaq or dynah)");
  }
  *out = static_cast<dynah_agent_kind>(*kind);
  return DYNAH_OK;
}

void dynah_maze_config_default(dynah_maze_config* cfg) {
  if (cfg == nullptr) return;
  const dynah::MazeGenConfig d;
  cfg->height = d.height;
  cfg->width = d.width;
  cfg->start_row = d.start.row;
  cfg->start_col = d.start.col;
  cfg->goal_row = d.goal.row;
  cfg->goal_col = d.goal.col;
  cfg->sigma = d.sigma;
  cfg->seed = d.seed;
  cfg->max_attempts = d.max_attempts;
}

void dynah_agent_config_default(dynah_agent_config* cfg) {
  if (cfg == nullptr) return;
  const dynah::AgentConfig d;
  cfg->alpha = d.alpha;
  cfg->gamma = d.gamma;
  cfg->epsilon = d.epsilon;
  cfg->planning_steps = d.planning_steps;
  cfg->max_episode_steps = d.max_episode_steps;
}

dynah_status dynah_maze_generate(const dynah_maze_config* cfg, dynah_maze** out) {
  DYNAH_REQUIRE(cfg);
  DYNAH_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new dynah_maze{dynah::generate_maze(to_cpp(*cfg))}; });
}

dynah_status dynah_maze_parse(const char* text, size_t length, dynah_maze** out) {
  DYNAH_REQUIRE(text);
  DYNAH_REQUIRE(out);
  *out = nullptr;
  return guarded(
      [&] { *out = new dynah_maze{dynah::parse_maze(std::string_view(text, length))}; });
}

dynah_status dynah_maze_load(const char* path, dynah_maze** out) {
  DYNAH_REQUIRE(path);
  DYNAH_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const std::string text = dynah::read_text_file(path);
    try {
      *out = new dynah_maze{dynah::parse_maze(text)};
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string(path) + ": " + e.what());
    }
  });
}

dynah_status dynah_maze_save(const dynah_maze* maze, const char* path) {
  DYNAH_REQUIRE(maze);
  DYNAH_REQUIRE(path);
  return guarded([&] { dynah::write_file_atomic(path, dynah::format_maze(maze->grid)); });
}

dynah_status dynah_maze_format(const dynah_maze* maze, char* buf, size_t capacity,
                               size_t* needed) {
  DYNAH_REQUIRE(maze);
  DYNAH_REQUIRE(needed);
  return guarded([&] {
    const std::string text = dynah::format_maze(maze->grid);
    *needed = text.size();
    if (buf != nullptr && capacity > 0) {
      const size_t n = std::min(capacity - 1, text.size());
      std::memcpy(buf, text.data(), n);
      buf[n] = '\0';
    }
  });
}

int32_t dynah_maze_height(const dynah_maze* maze) { return maze ? maze->grid.height() : 0; }
int32_t dynah_maze_width(const dynah_maze* maze) { return maze ? maze->grid.width() : 0; }

void dynah_maze_start(const dynah_maze* maze, int32_t* row, int32_t* col) {
  if (maze == nullptr) return;
  if (row) *row = maze->grid.start().row;
  if (col) *col = maze->grid.start().col;
}

void dynah_maze_goal(const dynah_maze* maze, int32_t* row, int32_t* col) {
  if (maze == nullptr) return;
  if (row) *row = maze->grid.goal().row;
  if (col) *col = maze->grid.goal().col;
}

int dynah_maze_is_obstacle(const dynah_maze* maze, int32_t row, int32_t col) {
  if (maze == nullptr || !maze->grid.in_bounds({row, col})) return -1;
  return maze->grid.is_obstacle({row, col}) ? 1 : 0;
}

int dynah_maze_is_solvable(const dynah_maze* maze) {
  if (maze == nullptr) return -1;
  return dynah::is_solvable(maze->grid) ? 1 : 0;
}

void dynah_maze_free(dynah_maze* maze) { delete maze; }

dynah_status dynah_maze_solve(const dynah_maze* maze, dynah_path** out) {
  DYNAH_REQUIRE(maze);
  DYNAH_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new dynah_path{dynah::astar_shortest(maze->grid)}; });
}

int dynah_path_found(const dynah_path* path) { return path && path->result.found ? 1 : 0; }
int32_t dynah_path_length(const dynah_path* path) { return path ? path->result.length : 0; }
size_t dynah_path_cell_count(const dynah_path* path) {
  return path ? path->result.path.size() : 0;
}

dynah_status dynah_path_cell(const dynah_path* path, size_t index, int32_t* row,
                             int32_t* col) {
  DYNAH_REQUIRE(path);
  if (index >= path->result.path.size()) {
    return fail(DYNAH_ERR_OUT_OF_RANGE, "path index out of range");
  }
  if (row) *row = path->result.path[index].row;
  if (col) *col = path->result.path[index].col;
  return DYNAH_OK;
}

void dynah_path_free(dynah_path* path) { delete path; }

dynah_status dynah_experiment_create(dynah_experiment** out) {
  DYNAH_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new dynah_experiment{}; });
}

void dynah_experiment_free(dynah_experiment* exp) { delete exp; }

dynah_status dynah_experiment_set_maze_config(dynah_experiment* exp,
                                              const dynah_maze_config* cfg) {
  DYNAH_REQUIRE(exp);
  DYNAH_REQUIRE(cfg);
  return guarded([&] {
    auto maze = to_cpp(*cfg);
    maze.validate();
    exp->config.maze = maze;
  });
}

dynah_status dynah_experiment_set_fixed_maze(dynah_experiment* exp, const dynah_maze* maze) {
  DYNAH_REQUIRE(exp);
  return guarded([&] {
    if (maze == nullptr) {
      exp->config.fixed_maze.reset();
    } else {
      exp->config.fixed_maze = maze->grid;
    }
  });
}

dynah_status dynah_experiment_set_agent(dynah_experiment* exp, dynah_agent_kind kind,
                                        const dynah_agent_config* cfg) {
  DYNAH_REQUIRE(exp);
  DYNAH_REQUIRE(cfg);
  return guarded([&] {
    const auto agent = to_cpp(*cfg);
    agent.validate();
    exp->config.agent = to_cpp(kind);
    exp->config.agent_cfg = agent;
  });
}

dynah_status dynah_experiment_set_heuristic(dynah_experiment* exp, const char* name) {
  DYNAH_REQUIRE(exp);
  DYNAH_REQUIRE(name);
  return guarded([&] {
    dynah::make_heuristic(name);
    exp->config.heuristic = name;
  });
}

dynah_status dynah_experiment_set_runs(dynah_experiment* exp, int32_t runs,
                                       int32_t episodes) {
  DYNAH_REQUIRE(exp);
  if (runs < 1 || episodes < 1) {
    return fail(DYNAH_ERR_INVALID_ARGUMENT, "runs and episodes must be at least 1");
  }
  exp->config.runs = runs;
  exp->config.episodes = episodes;
  return DYNAH_OK;
}

dynah_status dynah_experiment_set_seed(dynah_experiment* exp, uint64_t master_seed) {
  DYNAH_REQUIRE(exp);
  exp->config.master_seed = master_seed;
  return DYNAH_OK;
}

dynah_status dynah_experiment_set_jobs(dynah_experiment* exp, int32_t jobs) {
  DYNAH_REQUIRE(exp);
  if (jobs < 1) return fail(DYNAH_ERR_INVALID_ARGUMENT, "jobs must be at least 1");
  exp->config.jobs = jobs;
  return DYNAH_OK;
}

dynah_status dynah_experiment_run(const dynah_experiment* exp, dynah_result** out) {
  DYNAH_REQUIRE(exp);
  DYNAH_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new dynah_result{dynah::run_experiment(exp->config)}; });
}

int32_t dynah_result_runs(const dynah_result* result) {
  return result ? curve(result).runs() : 0;
}

int32_t dynah_result_episodes(const dynah_result* result) {
  return result ? curve(result).episodes() : 0;
}

dynah_status dynah_result_steps(const dynah_result* result, int32_t run, int32_t episode,
                                int32_t* steps, int* capped) {
  DYNAH_REQUIRE(result);
  return guarded([&] {
    check_run_episode(result, run, episode);
    const auto r = static_cast<size_t>(run);
    const auto e = static_cast<size_t>(episode);
    if (steps) *steps = curve(result).steps[r][e];
    if (capped) *capped = curve(result).capped[r][e] ? 1 : 0;
  });
}

dynah_status dynah_result_mean(const dynah_result* result, int32_t episode, double* mean) {
  DYNAH_REQUIRE(result);
  DYNAH_REQUIRE(mean);
  return guarded([&] {
    check_run_episode(result, 0, episode);
    *mean = curve(result).mean[static_cast<size_t>(episode)];
  });
}

double dynah_result_final_mean(const dynah_result* result) {
  return result ? result->result.summary.final_mean_steps : 0.0;
}

dynah_status dynah_result_run_summary(const dynah_result* result, int32_t run,
                                      int32_t* greedy_length, int* greedy_reached,
                                      int32_t* optimal_length, int32_t* capped_episodes) {
  DYNAH_REQUIRE(result);
  return guarded([&] {
    check_run_episode(result, run, 0);
    const auto& rec = result->result.summary.runs[static_cast<size_t>(run)];
    if (greedy_length) *greedy_length = rec.greedy_length;
    if (greedy_reached) *greedy_reached = rec.greedy_reached_goal ? 1 : 0;
    if (optimal_length) *optimal_length = rec.optimal_length;
    if (capped_episodes) *capped_episodes = rec.capped_episodes;
  });
}

dynah_status dynah_result_write_csv(const dynah_result* result, const char* path,
                                    int with_stats) {
  DYNAH_REQUIRE(result);
  DYNAH_REQUIRE(path);
  return guarded([&] {
    dynah::write_file_atomic(path, dynah::curve_csv(result->result, with_stats != 0));
  });
}

dynah_status dynah_result_write_summary(const dynah_result* result, const char* path) {
  DYNAH_REQUIRE(result);
  DYNAH_REQUIRE(path);
  return guarded(
      [&] { dynah::write_file_atomic(path, dynah::summary_json(result->result)); });
}

dynah_status dynah_results_write_combined_summary(const dynah_result* const* results,
                                                  const char* const* labels, size_t count,
                                                  const char* path) {
  DYNAH_REQUIRE(path);
  if (count > 0) {
    DYNAH_REQUIRE(results);
    DYNAH_REQUIRE(labels);
  }
  return guarded([&] {
    std::vector<std::string> names;
    std::vector<const dynah::ExperimentResult*> ptrs;
    for (size_t i = 0; i < count; ++i) {
      if (results[i] == nullptr || labels[i] == nullptr) {
        throw std::invalid_argument("combined summary: null result or label");
      }
      names.emplace_back(labels[i]);
      ptrs.push_back(&results[i]->result);
    }
    dynah::write_file_atomic(path, dynah::combined_summary_json(names, ptrs));
  });
}

void dynah_result_free(dynah_result* result) { delete result; }

}  // extern "C"
