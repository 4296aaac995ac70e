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

#include "dynah/heuristics.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dynah {

std::optional<double> squared_euclidean_badness(Position s, Move a,
                                                const LearnedModel& model,
                                                Position goal) {
  const auto outcome = model.query(s, a);
  if (!outcome) return std::nullopt;
  const long long dr = outcome->next.row - goal.row;
  const long long dc = outcome->next.col - goal.col;
  return static_cast<double>(dr * dr + dc * dc);
}

std::optional<Move> heuristic_action(Position s, const Heuristic& h,
                                     const LearnedModel& model, Position goal,
                                     RngStream& rng) {
  std::array<Move, kNumMoves> best{};
  std::size_t best_count = 0;
  double best_score = 0.0;
  for (const Move m : kAllMoves) {
    const auto score = h.score(s, m, model, goal);
    if (!score) continue;
    if (best_count == 0 || *score > best_score) {
      best_score = *score;
      best[0] = m;
      best_count = 1;
    } else if (*score == best_score) {
      best[best_count++] = m;
    }
  }
  if (best_count == 0) return std::nullopt;
  if (best_count == 1) return best[0];
  return best[rng.uniform_index(best_count)];
}

namespace {

struct Registry {
  std::mutex mutex;
  std::map<std::string, HeuristicFactory, std::less<>> factories;

  Registry() {
    factories.emplace(std::string(SquaredEuclideanHeuristic::kName), [] {
      return std::make_shared<const SquaredEuclideanHeuristic>();
    });
  }
};

Registry& registry() {
  static Registry instance;
  return instance;
}

}  // namespace

void register_heuristic(std::string name, HeuristicFactory factory) {
  if (name.empty() || !factory) {
    throw std::invalid_argument("register_heuristic: empty name or factory");
  }
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  reg.factories.insert_or_assign(std::move(name), std::move(factory));
}

std::shared_ptr<const Heuristic> make_heuristic(std::string_view name) {
  HeuristicFactory factory;
  {
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    const auto it = reg.factories.find(name);
    if (it == reg.factories.end()) {
      throw std::invalid_argument("unknown heuristic '" + std::string(name) + "'");
    }
    factory = it->second;
  }
  // Called unlocked so factories may compose other registered heuristics.
  return factory();
}

std::vector<std::string> heuristic_names() {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  std::vector<std::string> names;
  for (const auto& [name, factory] : reg.factories) names.push_back(name);
  return names;
}

}  // namespace dynah
