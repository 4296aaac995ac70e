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

// dynah: maze generation, A* solving and learning-curve experiments.
//
//   dynah generate --seed 7 --out maze.txt
//   dynah solve maze.txt
//   dynah run --agent dynah --seed 1 --out results/
//   dynah compare --episodes 100 --runs 30 --planning-steps 10 --seed 1 --out results/
//   dynah sweep --values 1,5,10,25 --seed 1 --out results/
//
// Every subcommand also accepts --config FILE with flat `key = value` lines
// named after the long flags. Precedence: flags, then the config file, then
// DYNAH_SEED (seed only), then built-in defaults.

#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "dynah/dynah.h"

namespace {

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(dynah_status status) {
  if (status != DYNAH_OK) throw CliError(dynah_last_error());
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using MazePtr = std::unique_ptr<dynah_maze, Deleter<dynah_maze, dynah_maze_free>>;
using PathPtr = std::unique_ptr<dynah_path, Deleter<dynah_path, dynah_path_free>>;
using ExperimentPtr =
    std::unique_ptr<dynah_experiment, Deleter<dynah_experiment, dynah_experiment_free>>;
using ResultPtr = std::unique_ptr<dynah_result, Deleter<dynah_result, dynah_result_free>>;

struct Cell {
  int32_t row = 0;
  int32_t col = 0;
};

Cell parse_cell(const std::string& text, const char* flag) {
  Cell cell;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> cell.row >> comma >> cell.col) || comma != ',' || !(in >> std::ws).eof()) {
    throw CliError(std::string(flag) + " expects ROW,COL, got '" + text + "'");
  }
  return cell;
}

std::vector<int32_t> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int32_t> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0 || v > INT32_MAX) throw std::invalid_argument(item);
      values.push_back(static_cast<int32_t>(v));
    } catch (const std::exception&) {
      throw CliError(std::string(flag) + ": '" + item + "' is not a non-negative integer");
    }
  }
  if (values.empty()) throw CliError(std::string(flag) + " needs at least one value");
  return values;
}

// Splices `--config FILE` into long flags: each `key = value` line becomes
// `--key value` unless the command line already sets --key. Blank lines and
// lines starting with '#' or ';' are skipped; `stats = true|false` toggles
// the flag. CLI11 only reads config files on the top-level app, hence this.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::vector<std::string> out;
  std::optional<std::string> file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 == args.size()) throw CliError("--config needs a file name");
      file = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      file = args[i].substr(9);
    } else {
      out.push_back(args[i]);
    }
  }
  if (!file) return out;

  std::ifstream in(*file);
  if (!in) throw CliError("cannot read config file '" + *file + "'");
  const auto trim = [](std::string text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string();
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
  };
  const auto given = [&](const std::string& flag) {
    for (const auto& arg : out) {
      if (arg == flag || arg.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CliError(*file + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    const std::string flag = "--" + key;
    if (key.empty() || given(flag)) continue;
    if (key == "stats") {
      if (value == "true") {
        out.push_back(flag);
      } else if (value != "false") {
        throw CliError(*file + ":" + std::to_string(lineno) + ": stats must be true or false");
      }
      continue;
    }
    out.push_back(flag);
    out.push_back(value);
  }
  return out;
}

struct Options {
  dynah_maze_config maze{};
  dynah_agent_config agent{};
  std::string start = "1,4";
  std::string goal = "28,34";
  std::string agent_kind = "dynah";
  std::string heuristic = "euclidean-squared";
  std::string fixed_maze;
  std::string values = "1,5,10,25";
  std::string out;
  std::string maze_file;
  uint64_t seed = 0;
  int32_t runs = 30;
  int32_t episodes = 100;
  int32_t jobs = 1;
  bool stats = false;
  CLI::Option* seed_opt = nullptr;

  Options() {
    dynah_maze_config_default(&maze);
    dynah_agent_config_default(&agent);
  }

  // Fills in the seed from DYNAH_SEED when neither a flag nor the config
  // file provided one, and the cell coordinates from their text forms.
  void resolve() {
    if (seed_opt != nullptr && seed_opt->count() == 0) {
      if (const char* env = std::getenv("DYNAH_SEED"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        errno = 0;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (errno != 0 || *end != '\0' || *env == '-') {
          throw CliError(std::string("DYNAH_SEED is not an unsigned integer: '") + env + "'");
        }
        seed = v;
      }
    }
    const Cell s = parse_cell(start, "--start");
    const Cell g = parse_cell(goal, "--goal");
    maze.start_row = s.row;
    maze.start_col = s.col;
    maze.goal_row = g.row;
    maze.goal_col = g.col;
    maze.seed = seed;
  }
};

void add_maze_options(CLI::App* app, Options& o) {
  app->add_option("--height", o.maze.height, "Maze rows")->capture_default_str();
  app->add_option("--width", o.maze.width, "Maze columns")->capture_default_str();
  app->add_option("--start", o.start, "Start cell ROW,COL (0-based)")->capture_default_str();
  app->add_option("--goal", o.goal, "Goal cell ROW,COL (0-based)")->capture_default_str();
  app->add_option("--sigma", o.maze.sigma, "Std. deviation of the tile noise")
      ->capture_default_str();
  app->add_option("--max-attempts", o.maze.max_attempts,
                  "Regeneration budget for unsolvable mazes")
      ->capture_default_str();
}

void add_seed_option(CLI::App* app, Options& o) {
  o.seed_opt = app->add_option("--seed", o.seed, "Seed (falls back to DYNAH_SEED, then 0)")
                   ->capture_default_str();
}

void add_experiment_options(CLI::App* app, Options& o, bool with_agent_kind) {
  add_maze_options(app, o);
  add_seed_option(app, o);
  if (with_agent_kind) {
    app->add_option("--agent", o.agent_kind, "qlearning | dynaq | dynah")
        ->capture_default_str();
  }
  app->add_option("--runs", o.runs, "Independent runs (one maze each)")->capture_default_str();
  app->add_option("--episodes", o.episodes, "Episodes per run")->capture_default_str();
  app->add_option("--alpha", o.agent.alpha, "Step size")->capture_default_str();
  app->add_option("--gamma", o.agent.gamma, "Discount")->capture_default_str();
  app->add_option("--epsilon", o.agent.epsilon, "Exploration rate")->capture_default_str();
  app->add_option("--planning-steps", o.agent.planning_steps,
                  "Planning updates per real step")
      ->capture_default_str();
  app->add_option("--max-steps", o.agent.max_episode_steps, "Per-episode step cap")
      ->capture_default_str();
  app->add_option("--heuristic", o.heuristic, "Dyna-H badness heuristic")
      ->capture_default_str();
  app->add_option("--fixed-maze", o.fixed_maze, "Use this maze file for every run");
  app->add_option("--jobs", o.jobs, "Worker threads for independent runs")
      ->capture_default_str();
  app->add_flag("--stats", o.stats, "Append median and 95% band columns to the CSV");
  app->add_option("--out", o.out, "Output directory")->required();
}

ExperimentPtr make_experiment(const Options& o, dynah_agent_kind kind) {
  dynah_experiment* raw = nullptr;
  check(dynah_experiment_create(&raw));
  ExperimentPtr exp(raw);
  if (o.fixed_maze.empty()) {
    check(dynah_experiment_set_maze_config(exp.get(), &o.maze));
  } else {
    dynah_maze* maze = nullptr;
    check(dynah_maze_load(o.fixed_maze.c_str(), &maze));
    MazePtr owned(maze);
    check(dynah_experiment_set_fixed_maze(exp.get(), owned.get()));
  }
  check(dynah_experiment_set_agent(exp.get(), kind, &o.agent));
  check(dynah_experiment_set_heuristic(exp.get(), o.heuristic.c_str()));
  check(dynah_experiment_set_runs(exp.get(), o.runs, o.episodes));
  check(dynah_experiment_set_seed(exp.get(), o.seed));
  check(dynah_experiment_set_jobs(exp.get(), o.jobs));
  return exp;
}

ResultPtr run(const dynah_experiment* exp) {
  dynah_result* raw = nullptr;
  check(dynah_experiment_run(exp, &raw));
  return ResultPtr(raw);
}

dynah_agent_kind parse_kind(const std::string& name) {
  dynah_agent_kind kind{};
  check(dynah_parse_agent_kind(name.c_str(), &kind));
  return kind;
}

std::filesystem::path prepare_out_dir(const std::string& out) {
  std::filesystem::path dir(out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CliError("cannot create output directory " + out + ": " + ec.message());
  return dir;
}

struct Labeled {
  std::string label;
  ResultPtr result;
};

// Results are all computed before anything is written.
void write_results(const std::filesystem::path& dir, const std::vector<Labeled>& results,
                   bool stats) {
  std::vector<const dynah_result*> ptrs;
  std::vector<const char*> labels;
  for (const auto& r : results) {
    check(dynah_result_write_csv(r.result.get(), (dir / (r.label + ".csv")).c_str(),
                                 stats ? 1 : 0));
    ptrs.push_back(r.result.get());
    labels.push_back(r.label.c_str());
  }
  check(dynah_results_write_combined_summary(ptrs.data(), labels.data(), ptrs.size(),
                                             (dir / "summary.json").c_str()));
  for (const auto& r : results) {
    std::printf("%s: final mean steps %.17g\n", r.label.c_str(),
                dynah_result_final_mean(r.result.get()));
  }
}

int cmd_generate(Options& o) {
  o.resolve();
  dynah_maze* raw = nullptr;
  check(dynah_maze_generate(&o.maze, &raw));
  MazePtr maze(raw);
  check(dynah_maze_save(maze.get(), o.out.c_str()));
  std::printf("wrote %s (height=%d width=%d start=%d,%d goal=%d,%d sigma=%.17g seed=%llu)\n",
              o.out.c_str(), o.maze.height, o.maze.width, o.maze.start_row, o.maze.start_col,
              o.maze.goal_row, o.maze.goal_col, o.maze.sigma,
              static_cast<unsigned long long>(o.maze.seed));
  return 0;
}

int cmd_solve(Options& o) {
  dynah_maze* raw = nullptr;
  check(dynah_maze_load(o.maze_file.c_str(), &raw));
  MazePtr maze(raw);
  dynah_path* raw_path = nullptr;
  check(dynah_maze_solve(maze.get(), &raw_path));
  PathPtr path(raw_path);
  if (!dynah_path_found(path.get())) {
    std::fprintf(stderr, "dynah: error: no path from start to goal\n");
    return 1;
  }
  std::printf("%d\n", dynah_path_length(path.get()));
  std::string line;
  for (size_t i = 0; i < dynah_path_cell_count(path.get()); ++i) {
    int32_t r = 0;
    int32_t c = 0;
    check(dynah_path_cell(path.get(), i, &r, &c));
    if (i > 0) line += ' ';
    line += std::to_string(r) + "," + std::to_string(c);
  }
  std::printf("%s\n", line.c_str());
  return 0;
}

int cmd_run(Options& o) {
  o.resolve();
  const dynah_agent_kind kind = parse_kind(o.agent_kind);
  const auto dir = prepare_out_dir(o.out);
  std::vector<Labeled> results;
  results.push_back({dynah_agent_kind_name(kind), run(make_experiment(o, kind).get())});
  write_results(dir, results, o.stats);
  return 0;
}

int cmd_compare(Options& o) {
  o.resolve();
  const auto dir = prepare_out_dir(o.out);
  std::vector<Labeled> results;
  for (const auto kind : {DYNAH_AGENT_QLEARNING, DYNAH_AGENT_DYNAQ, DYNAH_AGENT_DYNAH}) {
    results.push_back({dynah_agent_kind_name(kind), run(make_experiment(o, kind).get())});
  }
  write_results(dir, results, o.stats);
  return 0;
}

int cmd_sweep(Options& o) {
  o.resolve();
  const dynah_agent_kind kind = parse_kind(o.agent_kind);
  const auto values = parse_int_list(o.values, "--values");
  const auto dir = prepare_out_dir(o.out);
  std::vector<Labeled> results;
  for (const int32_t n : values) {
    const std::string label =
        std::string(dynah_agent_kind_name(kind)) + "_n" + std::to_string(n);
    bool seen = false;
    for (const auto& r : results) seen = seen || r.label == label;
    if (seen) continue;
    Options variant = o;
    variant.agent.planning_steps = n;
    results.push_back({label, run(make_experiment(variant, kind).get())});
  }
  write_results(dir, results, o.stats);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Q-learning, Dyna-Q and Dyna-H on random grid mazes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dynah_version());

  Options generate_opts;
  auto* generate = app.add_subcommand("generate", "Write a random solvable maze file");
  add_maze_options(generate, generate_opts);
  add_seed_option(generate, generate_opts);
  generate_opts.out = "maze.txt";
  generate->add_option("--out", generate_opts.out, "Maze file to write")->capture_default_str();

  Options solve_opts;
  auto* solve = app.add_subcommand("solve", "Print the optimal path length and path");
  solve->add_option("maze", solve_opts.maze_file, "Maze file")->required();

  Options run_opts;
  auto* run_cmd = app.add_subcommand("run", "Learning curve for one agent");
  add_experiment_options(run_cmd, run_opts, true);

  Options compare_opts;
  auto* compare = app.add_subcommand("compare", "Q-learning vs Dyna-Q vs Dyna-H");
  add_experiment_options(compare, compare_opts, false);

  Options sweep_opts;
  sweep_opts.agent_kind = "dynah";
  auto* sweep = app.add_subcommand("sweep", "Learning curves across planning budgets");
  add_experiment_options(sweep, sweep_opts, true);
  sweep->add_option("--values", sweep_opts.values, "Comma-separated planning budgets")
      ->capture_default_str();

  std::string config_help;
  for (auto* sub : {generate, run_cmd, compare, sweep}) {
    // Consumed by expand_config before parsing; registered for --help.
    sub->add_option("--config", config_help, "Flat key = value file mirroring the long flags");
  }

  try {
    std::vector<std::string> args = expand_config({argv + 1, argv + argc});
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CliError& e) {
    std::fprintf(stderr, "dynah: error: %s\n", e.what());
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "dynah: error: %s\n", e.what());
    return 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(generate_opts);
    if (solve->parsed()) return cmd_solve(solve_opts);
    if (run_cmd->parsed()) return cmd_run(run_opts);
    if (compare->parsed()) return cmd_compare(compare_opts);
    if (sweep->parsed()) return cmd_sweep(sweep_opts);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "dynah: error: %s\n", e.what());
    return 1;
  }
  return 1;
}
