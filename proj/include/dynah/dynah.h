/*
 * Copyright 2026 The dynah Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libdynah.
 *
 * Objects are opaque handles created by dynah_*_create/generate/load/run
 * functions and released by the matching dynah_*_free. Every fallible call
 * returns a dynah_status; on failure, dynah_last_error() describes the
 * problem for the calling thread until its next failing call.
 *
 * Coordinates are 0-based (row, col).
 */

#ifndef DYNAH_DYNAH_H_
#define DYNAH_DYNAH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DYNAH_BUILDING_LIBRARY)
#    define DYNAH_API __declspec(dllexport)
#  else
#    define DYNAH_API __declspec(dllimport)
#  endif
#else
#  define DYNAH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dynah_status {
  DYNAH_OK = 0,
  DYNAH_ERR_INVALID_ARGUMENT = 1, /* bad config, malformed maze text, ... */
  DYNAH_ERR_IO = 2,               /* unreadable/unwritable file */
  DYNAH_ERR_GENERATION = 3,       /* no solvable maze within the attempt budget */
  DYNAH_ERR_OUT_OF_RANGE = 4,     /* index past the end of a result */
  DYNAH_ERR_INTERNAL = 5
} dynah_status;

typedef enum dynah_agent_kind {
  DYNAH_AGENT_QLEARNING = 0,
  DYNAH_AGENT_DYNAQ = 1,
  DYNAH_AGENT_DYNAH = 2
} dynah_agent_kind;

typedef struct dynah_maze_config {
  int32_t height;
  int32_t width;
  int32_t start_row;
  int32_t start_col;
  int32_t goal_row;
  int32_t goal_col;
  double sigma;
  uint64_t seed;
  int32_t max_attempts;
} dynah_maze_config;

typedef struct dynah_agent_config {
  double alpha;
  double gamma;
  double epsilon;
  int32_t planning_steps;
  int32_t max_episode_steps;
} dynah_agent_config;

typedef struct dynah_maze dynah_maze;
typedef struct dynah_path dynah_path;
typedef struct dynah_experiment dynah_experiment;
typedef struct dynah_result dynah_result;

DYNAH_API const char* dynah_version(void);
DYNAH_API const char* dynah_last_error(void);
DYNAH_API const char* dynah_status_name(dynah_status status);
DYNAH_API const char* dynah_agent_kind_name(dynah_agent_kind kind);
DYNAH_API dynah_status dynah_parse_agent_kind(const char* name, dynah_agent_kind* out);

/* Defaults: 39x36, start (1,4), goal (28,34), sigma 0.3, seed 0, 1000 attempts. */
DYNAH_API void dynah_maze_config_default(dynah_maze_config* cfg);
/* Defaults: alpha 0.1, gamma 0.95, epsilon 0.1, N 10, 10000-step cap. */
DYNAH_API void dynah_agent_config_default(dynah_agent_config* cfg);

/* ---- mazes ---- */

DYNAH_API dynah_status dynah_maze_generate(const dynah_maze_config* cfg, dynah_maze** out);
DYNAH_API dynah_status dynah_maze_parse(const char* text, size_t length, dynah_maze** out);
DYNAH_API dynah_status dynah_maze_load(const char* path, dynah_maze** out);
DYNAH_API dynah_status dynah_maze_save(const dynah_maze* maze, const char* path);
/*
 * Writes the maze file text into buf (NUL-terminated when capacity allows)
 * and the full text length, without the NUL, into *needed.
 */
DYNAH_API dynah_status dynah_maze_format(const dynah_maze* maze, char* buf, size_t capacity,
                                         size_t* needed);
DYNAH_API int32_t dynah_maze_height(const dynah_maze* maze);
DYNAH_API int32_t dynah_maze_width(const dynah_maze* maze);
DYNAH_API void dynah_maze_start(const dynah_maze* maze, int32_t* row, int32_t* col);
DYNAH_API void dynah_maze_goal(const dynah_maze* maze, int32_t* row, int32_t* col);
DYNAH_API int dynah_maze_is_obstacle(const dynah_maze* maze, int32_t row, int32_t col);
DYNAH_API int dynah_maze_is_solvable(const dynah_maze* maze);
DYNAH_API void dynah_maze_free(dynah_maze* maze);

/* ---- optimal paths ---- */

DYNAH_API dynah_status dynah_maze_solve(const dynah_maze* maze, dynah_path** out);
DYNAH_API int dynah_path_found(const dynah_path* path);
DYNAH_API int32_t dynah_path_length(const dynah_path* path);
/* Number of cells on the path: length + 1 when found, else 0. */
DYNAH_API size_t dynah_path_cell_count(const dynah_path* path);
DYNAH_API dynah_status dynah_path_cell(const dynah_path* path, size_t index, int32_t* row,
                                       int32_t* col);
DYNAH_API void dynah_path_free(dynah_path* path);

/* ---- experiments ---- */

/* A new experiment with all defaults: Dyna-H, 30 runs, 100 episodes. */
DYNAH_API dynah_status dynah_experiment_create(dynah_experiment** out);
DYNAH_API void dynah_experiment_free(dynah_experiment* exp);
DYNAH_API dynah_status dynah_experiment_set_maze_config(dynah_experiment* exp,
                                                        const dynah_maze_config* cfg);
/* Copies `maze`; every run then uses it instead of a generated maze. NULL clears. */
DYNAH_API dynah_status dynah_experiment_set_fixed_maze(dynah_experiment* exp,
                                                       const dynah_maze* maze);
DYNAH_API dynah_status dynah_experiment_set_agent(dynah_experiment* exp, dynah_agent_kind kind,
                                                  const dynah_agent_config* cfg);
DYNAH_API dynah_status dynah_experiment_set_heuristic(dynah_experiment* exp, const char* name);
DYNAH_API dynah_status dynah_experiment_set_runs(dynah_experiment* exp, int32_t runs,
                                                 int32_t episodes);
DYNAH_API dynah_status dynah_experiment_set_seed(dynah_experiment* exp, uint64_t master_seed);
DYNAH_API dynah_status dynah_experiment_set_jobs(dynah_experiment* exp, int32_t jobs);
DYNAH_API dynah_status dynah_experiment_run(const dynah_experiment* exp, dynah_result** out);

DYNAH_API int32_t dynah_result_runs(const dynah_result* result);
DYNAH_API int32_t dynah_result_episodes(const dynah_result* result);
DYNAH_API dynah_status dynah_result_steps(const dynah_result* result, int32_t run,
                                          int32_t episode, int32_t* steps, int* capped);
DYNAH_API dynah_status dynah_result_mean(const dynah_result* result, int32_t episode,
                                         double* mean);
DYNAH_API double dynah_result_final_mean(const dynah_result* result);
DYNAH_API dynah_status dynah_result_run_summary(const dynah_result* result, int32_t run,
                                                int32_t* greedy_length, int* greedy_reached,
                                                int32_t* optimal_length,
                                                int32_t* capped_episodes);
DYNAH_API dynah_status dynah_result_write_csv(const dynah_result* result, const char* path,
                                              int with_stats);
DYNAH_API dynah_status dynah_result_write_summary(const dynah_result* result, const char* path);
/* One JSON object keyed by labels[i]. */
DYNAH_API dynah_status dynah_results_write_combined_summary(const dynah_result* const* results,
                                                            const char* const* labels,
                                                            size_t count, const char* path);
DYNAH_API void dynah_result_free(dynah_result* result);

#ifdef __cplusplus
}
#endif

#endif /* DYNAH_DYNAH_H_ */
