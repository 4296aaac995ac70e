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
#include <map>
#include <memory>
#include <random>
#include <string>

#include "doctest.h"
#include "dynah/heuristics.hpp"
#include "dynah/learned_model.hpp"
#include "dynah/rng.hpp"

namespace dynah {
namespace {

// Wraps another heuristic and applies a strictly increasing transform.
class Rescaled final : public Heuristic {
 public:
  Rescaled(std::shared_ptr<const Heuristic> inner, double (*f)(double))
      : inner_(std::move(inner)), f_(f) {}
  std::optional<double> score(Position s, Move a, const LearnedModel& model,
                              Position goal) const override {
    const auto v = inner_->score(s, a, model, goal);
    if (!v) return std::nullopt;
    return f_(*v);
  }
  std::string_view name() const override { return "rescaled"; }

 private:
  std::shared_ptr<const Heuristic> inner_;
  double (*f_)(double);
};

double sq_dist(Position a, Position b) {
  const double dr = a.row - b.row;
  const double dc = a.col - b.col;
  return dr * dr + dc * dc;
}

}  // namespace

TEST_CASE("badness: zero at the goal, one next to it, absent when unmodeled") {
  LearnedModel model(39, 36);
  const Position goal{28, 34};
  model.record({28, 33}, Move::kRight, {goal, 0.0, true});
  model.record({26, 34}, Move::kDown, {{27, 34}, -1.0, false});
  CHECK(squared_euclidean_badness({28, 33}, Move::kRight, model, goal) == 0.0);
  CHECK(squared_euclidean_badness({26, 34}, Move::kDown, model, goal) == 1.0);
  CHECK_FALSE(squared_euclidean_badness({26, 34}, Move::kUp, model, goal).has_value());
  CHECK_FALSE(squared_euclidean_badness({0, 0}, Move::kLeft, model, goal).has_value());
}

TEST_CASE("heuristic_action picks the modeled move whose outcome is farthest") {
  LearnedModel model(10, 10);
  const Position goal{9, 9};
  const Position s{4, 4};
  // Up lands 25 away, Down 9 away (squared).
  model.record(s, Move::kUp, {{4, 9}, -1.0, false});
  model.record(s, Move::kDown, {{6, 9}, -1.0, false});
  CHECK(squared_euclidean_badness(s, Move::kUp, model, goal) == 25.0);
  CHECK(squared_euclidean_badness(s, Move::kDown, model, goal) == 9.0);
  RngStream rng(1);
  CHECK(heuristic_action(s, SquaredEuclideanHeuristic{}, model, goal, rng) == Move::kUp);
}

TEST_CASE("heuristic_action: nothing modeled at s") {
  LearnedModel model(5, 5);
  model.record({1, 1}, Move::kUp, {{0, 1}, -1.0, false});
  RngStream rng(2);
  CHECK_FALSE(heuristic_action({2, 2}, SquaredEuclideanHeuristic{}, model, {4, 4}, rng));
}

TEST_CASE("heuristic_action: ties are uniform") {
  LearnedModel model(5, 5);
  const Position s{2, 2};
  // Every move is a self-loop, so every score is equal.
  for (const Move m : kAllMoves) model.record(s, m, {s, -1.0, false});
  RngStream rng(3);
  std::map<Move, int> counts;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    ++counts[*heuristic_action(s, SquaredEuclideanHeuristic{}, model, {4, 4}, rng)];
  }
  for (const Move m : kAllMoves) {
    CHECK(std::abs(counts[m] / static_cast<double>(kDraws) - 0.25) < 0.02);
  }
}

TEST_CASE("heuristic_action: no draw when the maximum is unique") {
  LearnedModel model(5, 5);
  model.record({2, 2}, Move::kLeft, {{2, 1}, -1.0, false});
  model.record({2, 2}, Move::kRight, {{2, 3}, -1.0, false});
  RngStream used(4);
  RngStream untouched(4);
  CHECK(heuristic_action({2, 2}, SquaredEuclideanHeuristic{}, model, {4, 4}, used) ==
        Move::kLeft);
  CHECK(used.next_u64() == untouched.next_u64());
}

TEST_CASE("property: argmax is invariant under strictly increasing rescaling") {
  std::mt19937_64 gen(17);
  const auto base = make_heuristic(kDefaultHeuristic);
  const Rescaled root(base, [](double v) { return std::sqrt(v); });
  const Rescaled affine(base, [](double v) { return 3.0 * v + 7.0; });
  const Rescaled logp(base, [](double v) { return std::log1p(v); });
  std::uniform_int_distribution<int> coord(0, 11);
  std::bernoulli_distribution keep(0.7);
  for (int trial = 0; trial < 500; ++trial) {
    LearnedModel model(12, 12);
    const Position s{coord(gen), coord(gen)};
    const Position goal{coord(gen), coord(gen)};
    for (const Move m : kAllMoves) {
      if (keep(gen)) model.record(s, m, {{coord(gen), coord(gen)}, -1.0, false});
    }
    const std::uint64_t seed = gen();
    RngStream r0(seed);
    RngStream r1(seed);
    RngStream r2(seed);
    RngStream r3(seed);
    const auto a = heuristic_action(s, *base, model, goal, r0);
    CHECK(heuristic_action(s, root, model, goal, r1) == a);
    CHECK(heuristic_action(s, affine, model, goal, r2) == a);
    CHECK(heuristic_action(s, logp, model, goal, r3) == a);
    if (a) {
      // The chosen outcome is at least as far from the goal as any other.
      const double chosen = sq_dist(model.query(s, *a)->next, goal);
      for (const Move m : kAllMoves) {
        if (const auto t = model.query(s, m)) CHECK(sq_dist(t->next, goal) <= chosen);
      }
    } else {
      CHECK_FALSE(model.has_any(s));
    }
  }
}

TEST_CASE("heuristic registry") {
  CHECK(make_heuristic(kDefaultHeuristic)->name() == kDefaultHeuristic);
  CHECK_THROWS_AS(make_heuristic("no-such-heuristic"), std::invalid_argument);

  register_heuristic("test-rescaled-sqrt", [] {
    return std::make_shared<Rescaled>(make_heuristic(kDefaultHeuristic),
                                      [](double v) { return std::sqrt(v); });
  });
  const auto names = heuristic_names();
  CHECK(std::find(names.begin(), names.end(), "test-rescaled-sqrt") != names.end());
  CHECK(std::find(names.begin(), names.end(), std::string(kDefaultHeuristic)) != names.end());
  CHECK(make_heuristic("test-rescaled-sqrt")->name() == "rescaled");
}

}  // namespace dynah
