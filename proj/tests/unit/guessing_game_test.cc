// Copyright 2026 The Anticipate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anticipate/guessing_game.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "anticipate/four_state_task.h"
#include "oracle.h"

namespace anticipate {
namespace {

GameSpec qubit_game(MeasurementKind kind, double theta) {
  TaskParams p(theta);
  return GameSpec::discrimination(joint_table(make_ensemble(p), task_measurement(kind, p)));
}

/// A random joint table with `rows` inputs and `cols` outcomes.
JointTable random_table(std::mt19937_64 &rng, std::size_t rows, std::size_t cols) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  JointTable t;
  for (std::size_t x = 0; x < rows; ++x) t.inputs.push_back("x" + std::to_string(x));
  for (std::size_t z = 0; z < cols; ++z) t.outcomes.push_back("z" + std::to_string(z));
  double total = 0.0;
  for (std::size_t i = 0; i < rows * cols; ++i) {
    t.values.push_back(u(rng));
    total += t.values.back();
  }
  for (auto &v : t.values) v /= total;
  return t;
}

PostProcessing random_post(std::mt19937_64 &rng, const GameSpec &game,
                           const std::vector<ExclusionSet> &sets) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PostProcessing nu(game.num_outcomes(), game.num_answers());
  for (const auto &s : sets) {
    for (std::size_t z = 0; z < game.num_outcomes(); ++z) {
      std::vector<double> row(game.num_answers());
      double total = 0.0;
      for (auto &v : row) total += (v = u(rng));
      for (std::size_t y = 0; y < row.size(); ++y) nu.set(s, z, y, row[y] / total);
    }
  }
  return nu;
}

TEST(SubsetsOfSize, LexicographicOrder) {
  auto s = subsets_of_size(4, 2);
  ASSERT_EQ(s.size(), 6u);
  EXPECT_EQ(s.front(), (ExclusionSet{0, 1}));
  EXPECT_EQ(s[1], (ExclusionSet{0, 2}));
  EXPECT_EQ(s.back(), (ExclusionSet{2, 3}));
  EXPECT_EQ(subsets_of_size(4, 0).size(), 1u);
}

TEST(GameSpec, RejectsInputWithoutCorrectAnswer) {
  std::mt19937_64 rng(1);
  auto table = random_table(rng, 2, 2);
  EXPECT_THROW(GameSpec({"y0", "y1"}, [](std::size_t x, std::size_t) { return x == 0; }, table),
               std::invalid_argument);
}

TEST(GameSpec, RejectsTableThatIsNotADistribution) {
  std::mt19937_64 rng(2);
  auto table = random_table(rng, 2, 2);
  table.values[0] += 0.1;
  EXPECT_THROW(GameSpec::discrimination(table), std::invalid_argument);
}

TEST(ExclusionInfoMap, QubitTaskWeights) {
  auto game = qubit_game(MeasurementKind::kStandard, 0.4);
  for (std::size_t k : {1u, 2u}) {
    auto alpha = exclusion_info_map(game, k);
    EXPECT_TRUE(is_valid_info_map(game, alpha));
    for (std::size_t x = 0; x < 4; ++x) {
      double row = 0.0;
      for (const auto &s : subsets_of_size(4, k)) {
        bool contains_x = std::find(s.begin(), s.end(), x) != s.end();
        EXPECT_NEAR(alpha.at(x, s), contains_x ? 0.0 : 1.0 / 3.0, 1e-15);
        row += alpha.at(x, s);
      }
      EXPECT_NEAR(row, 1.0, 1e-15);
    }
  }
}

TEST(ExclusionInfoMap, RejectsTooManyExclusions) {
  auto game = qubit_game(MeasurementKind::kStandard, 0.4);
  EXPECT_THROW(exclusion_info_map(game, 4), std::invalid_argument);
  EXPECT_NO_THROW(exclusion_info_map(game, 3));
}

TEST(SuccessWithCpost, StandardAndAnticipativeClosedForms) {
  for (double t : oracle::grid()) {
    TaskParams p(t);
    auto st = qubit_game(MeasurementKind::kStandard, t);
    auto an = qubit_game(MeasurementKind::kAnticipative, t);
    auto st_alpha = exclusion_info_map(st, 1);
    auto st_post = priority_post(st, priority_table(MeasurementKind::kStandard).answers,
                                 st_alpha.support());
    EXPECT_NEAR(success_with_cpost(st, st_alpha, st_post), oracle::st(1, t), 1e-13);
    auto an_alpha = exclusion_info_map(an, 2);
    auto an_post = priority_post(an, priority_table(MeasurementKind::kAnticipative).answers,
                                 an_alpha.support());
    EXPECT_NEAR(success_with_cpost(an, an_alpha, an_post), oracle::an(2, t), 1e-13);
  }
}

TEST(SuccessWithCpost, FullInformationGivesCertainty) {
  std::mt19937_64 rng(3);
  auto game = GameSpec::discrimination(random_table(rng, 4, 3));
  PartialInfoMap alpha;
  PostProcessing nu(3, 4);
  for (std::size_t x = 0; x < 4; ++x) {
    ExclusionSet others;
    for (std::size_t y = 0; y < 4; ++y) {
      if (y != x) others.push_back(y);
    }
    alpha.weights.push_back({{others, 1.0}});
    for (std::size_t z = 0; z < 3; ++z) nu.set_deterministic(others, z, x);
  }
  EXPECT_NEAR(success_with_cpost(game, alpha, nu), 1.0, 1e-14);
}

TEST(SuccessWithCpost, MissingRuleIsAnError) {
  auto game = qubit_game(MeasurementKind::kStandard, 0.4);
  auto alpha = exclusion_info_map(game, 1);
  PostProcessing nu(4, 4);
  nu.set_deterministic({0}, 0, 1);
  EXPECT_THROW(success_with_cpost(game, alpha, nu), std::invalid_argument);
  PostProcessing wrong_shape(3, 4);
  EXPECT_THROW(success_with_cpost(game, alpha, wrong_shape), std::invalid_argument);
}

TEST(SuccessNoCpost, Examples) {
  for (double t : oracle::grid()) {
    TaskParams p(t);
    auto st = qubit_game(MeasurementKind::kStandard, t);
    EXPECT_NEAR(success_no_cpost(st, relabel_post(st, {0, 1, 2, 3})), 0.5, 1e-14);
    auto an = qubit_game(MeasurementKind::kAnticipative, t);
    // +m -> +b, -m -> -b, +n -> +a, -n -> -a
    EXPECT_NEAR(success_no_cpost(an, relabel_post(an, {2, 3, 0, 1})), 4 * pq_values(p).q_plus,
                1e-14);
    EXPECT_NEAR(success_no_cpost(an, uniform_post(an)), 0.25, 1e-14);
  }
}

TEST(BayesOptimalPost, ReproducesPriorityTablesOffTies) {
  for (double t : {0.2, 0.7, 1.2, 1.5}) {
    for (auto kind : {MeasurementKind::kStandard, MeasurementKind::kAnticipative}) {
      auto game = qubit_game(kind, t);
      const auto &table = priority_table(kind);
      for (std::size_t k : {1u, 2u}) {
        auto alpha = exclusion_info_map(game, k);
        auto nu = bayes_optimal_post(game, alpha);
        for (const auto &s : alpha.support()) {
          for (std::size_t z = 0; z < 4; ++z) {
            EXPECT_EQ(nu.guess(s, z), priority_guess(table.answers[z], s))
                << kind_name(kind) << " k=" << k << " t=" << t << " z=" << z;
          }
        }
      }
    }
  }
}

TEST(BayesOptimalPost, EmptySetIsIdentityRelabelForStandard) {
  auto game = qubit_game(MeasurementKind::kStandard, 0.9);
  auto nu = bayes_optimal_post(game, exclusion_info_map(game, 0));
  for (std::size_t z = 0; z < 4; ++z) EXPECT_EQ(nu.guess({}, z), z);
}

TEST(BayesOptimalPost, TiesGoToLowestIndex) {
  JointTable t;
  t.inputs = {"x0", "x1"};
  t.outcomes = {"z"};
  t.values = {0.5, 0.5};
  auto game = GameSpec::discrimination(t);
  auto nu = bayes_optimal_post(game, exclusion_info_map(game, 0));
  EXPECT_EQ(nu.guess({}, 0), 0u);
}

TEST(BayesOptimalPost, BeatsRandomPostProcessings) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto game = GameSpec::discrimination(random_table(rng, 4, 5));
    for (std::size_t k : {0u, 1u, 2u}) {
      auto alpha = exclusion_info_map(game, k);
      double best = success_with_cpost(game, alpha, bayes_optimal_post(game, alpha));
      for (int i = 0; i < 100; ++i) {
        auto nu = random_post(rng, game, alpha.support());
        ASSERT_TRUE(nu.is_stochastic());
        EXPECT_LE(success_with_cpost(game, alpha, nu), best + 1e-15);
      }
    }
  }
}

TEST(BayesOptimalPost, WorksForNonDiscriminationGames) {
  std::mt19937_64 rng(5);
  // Three inputs, answers {0,1,2,3}; input x is answered correctly by x and x+1.
  auto table = random_table(rng, 3, 4);
  GameSpec game({"y0", "y1", "y2", "y3"},
                [](std::size_t x, std::size_t y) { return y == x || y == x + 1; }, table);
  EXPECT_EQ(game.correct_answers(1), (ExclusionSet{1, 2}));
  for (std::size_t k : {1u, 2u}) {
    auto alpha = exclusion_info_map(game, k);
    EXPECT_TRUE(is_valid_info_map(game, alpha));
    double best = success_with_cpost(game, alpha, bayes_optimal_post(game, alpha));
    for (int i = 0; i < 100; ++i) {
      EXPECT_LE(success_with_cpost(game, alpha, random_post(rng, game, alpha.support())),
                best + 1e-15);
    }
  }
}

TEST(CollapsePost, InputIndependentInformationCollapses) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    auto game = GameSpec::discrimination(random_table(rng, 4, 3));
    auto sets = subsets_of_size(4, 2);
    std::map<ExclusionSet, double> w;
    double total = 0.0;
    for (const auto &s : sets) total += (w[s] = u(rng));
    for (auto &[s, v] : w) v /= total;
    PartialInfoMap alpha;
    alpha.weights.assign(4, w);
    auto nu = random_post(rng, game, sets);
    EXPECT_NEAR(success_with_cpost(game, alpha, nu),
                success_no_cpost(game, collapse_post(nu, w)), 1e-12);
  }
}

TEST(PriorityGuess, SkipsExcludedAnswers) {
  EXPECT_EQ(priority_guess({0, 2, 3, 1}, {}), 0u);
  EXPECT_EQ(priority_guess({0, 2, 3, 1}, {0}), 2u);
  EXPECT_EQ(priority_guess({0, 2, 3, 1}, {0, 2}), 3u);
  EXPECT_THROW(priority_guess({0, 1}, {0, 1}), std::invalid_argument);
}

TEST(PostProcessing, GuessRejectsRandomizedRule) {
  PostProcessing nu(1, 2);
  nu.set({}, 0, 0, 0.5);
  nu.set({}, 0, 1, 0.5);
  EXPECT_TRUE(nu.is_stochastic());
  EXPECT_THROW(nu.guess({}, 0), std::logic_error);
}

}  // namespace
}  // namespace anticipate
