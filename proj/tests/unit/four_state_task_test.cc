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

#include "anticipate/four_state_task.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oracle.h"

namespace anticipate {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(TaskParams, RejectsAnglesOutsideRange) {
  EXPECT_THROW(TaskParams(0.0), std::invalid_argument);
  EXPECT_THROW(TaskParams(-0.1), std::invalid_argument);
  EXPECT_THROW(TaskParams(kPi / 2 + 1e-6), std::invalid_argument);
  EXPECT_NO_THROW(TaskParams(kPi / 2));
}

TEST(TaskParams, Directions) {
  TaskParams p(0.8);
  EXPECT_NEAR(dot(p.a(), p.b()), std::cos(0.8), 1e-15);
  EXPECT_NEAR(norm(p.a()), 1.0, 1e-15);
  for (std::size_t x = 0; x < 4; ++x) {
    auto d = p.input_direction(x);
    auto expected = oracle::input_dir(0.8, x);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(d[i], expected[i], 1e-15);
  }
}

TEST(Labels, KindsRoundTrip) {
  EXPECT_EQ(parse_kind("standard"), MeasurementKind::kStandard);
  EXPECT_EQ(parse_kind(kind_name(MeasurementKind::kAnticipative)),
            MeasurementKind::kAnticipative);
  EXPECT_THROW(parse_kind("other"), std::invalid_argument);
  EXPECT_EQ(outcome_labels(MeasurementKind::kAnticipative),
            (std::vector<Label>{"+m", "-m", "+n", "-n"}));
  EXPECT_EQ(input_labels(), (std::vector<Label>{"+a", "-a", "+b", "-b"}));
}

TEST(AnticipativeMeasurement, Directions) {
  for (double t : oracle::grid()) {
    TaskParams p(t);
    auto d = anticipative_directions(p);
    auto m = oracle::dir_mn(t, false), n = oracle::dir_mn(t, true);
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(d.m[i], m[i], 1e-15);
      EXPECT_NEAR(d.n[i], n[i], 1e-15);
    }
    EXPECT_NEAR(cos_omega(p), (3 + 5 * std::cos(t)) / (5 + 3 * std::cos(t)), 1e-15);
    EXPECT_NEAR(std::cos(omega(p)), dot(d.m, d.n), 1e-14);
  }
  EXPECT_NEAR(cos_omega(TaskParams(kPi / 2)), 0.6, 1e-15);
}

TEST(ClosedForm, MatchesIndependentFormulas) {
  for (double t : oracle::grid()) {
    TaskParams p(t);
    for (const auto &s : all_scenarios()) {
      double expected = s.kind == MeasurementKind::kStandard ? oracle::st(s.k, t)
                                                              : oracle::an(s.k, t);
      EXPECT_NEAR(closed_form(s, p), expected, 1e-15);
    }
  }
}

TEST(PipelineSuccess, MatchesClosedFormsAndOracle) {
  for (double t : oracle::grid()) {
    TaskParams p(t);
    for (const auto &s : all_scenarios()) {
      bool an = s.kind == MeasurementKind::kAnticipative;
      double got = pipeline_success(s, p);
      EXPECT_NEAR(got, closed_form(s, p), 1e-12) << t;
      EXPECT_NEAR(got, oracle::optimal_cpost_success(oracle::born_table(t, an), s.k), 1e-12);
    }
  }
}

TEST(PipelineSuccess, InequalityChainOnGrid) {
  for (double t : oracle::grid()) {
    TaskParams p(t);
    double an0 = pipeline_success({MeasurementKind::kAnticipative, 0}, p);
    double st0 = pipeline_success({MeasurementKind::kStandard, 0}, p);
    EXPECT_LE(an0, st0 + 1e-15);
    for (int k : {1, 2}) {
      double stk = pipeline_success({MeasurementKind::kStandard, k}, p);
      double ank = pipeline_success({MeasurementKind::kAnticipative, k}, p);
      EXPECT_LE(st0, stk);
      EXPECT_GT(ank - stk, 1e-6) << "k=" << k << " t=" << t;
    }
  }
}

TEST(PQValues, Identities) {
  for (double t : oracle::grid()) {
    auto pq = pq_values(TaskParams(t));
    EXPECT_NEAR(pq.p_plus + pq.p_minus, 0.125, 1e-15);
    EXPECT_NEAR(pq.q_plus + pq.q_minus, 0.125, 1e-15);
    EXPECT_GE(pq.q_plus, pq.p_plus);
  }
}

TEST(PriorityTable, PrintedRules) {
  const auto &st = priority_table(MeasurementKind::kStandard);
  EXPECT_EQ(st.answers[0], (std::vector<std::size_t>{0, 2, 3, 1}));
  EXPECT_EQ(st.answers[1], (std::vector<std::size_t>{1, 3, 2, 0}));
  EXPECT_EQ(st.answers[2], (std::vector<std::size_t>{2, 0, 1, 3}));
  EXPECT_EQ(st.answers[3], (std::vector<std::size_t>{3, 1, 0, 2}));
  const auto &an = priority_table(MeasurementKind::kAnticipative);
  EXPECT_EQ(an.answers[0], (std::vector<std::size_t>{2, 0, 1, 3}));
  EXPECT_EQ(an.answers[2], (std::vector<std::size_t>{0, 2, 3, 1}));
  EXPECT_EQ(an.answer_labels(3), (std::vector<Label>{"-a", "-b", "+b", "+a"}));
}

TEST(ThetaGrid, DefaultAndCustom) {
  auto g = default_theta_grid();
  ASSERT_EQ(g.size(), 25u);
  EXPECT_NEAR(g.front(), kPi / 50, 1e-15);
  EXPECT_NEAR(g.back(), kPi / 2, 1e-15);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(g[i], (i + 1) * kPi / 50, 1e-15);
  EXPECT_EQ(theta_grid(0.3, 1.0, 1), (std::vector<double>{1.0}));
  EXPECT_THROW(theta_grid(0.3, 1.0, 0), std::invalid_argument);
  EXPECT_THROW(theta_grid(0.0, 1.0, 5), std::invalid_argument);
  EXPECT_THROW(theta_grid(0.3, 2.0, 5), std::invalid_argument);
}

}  // namespace
}  // namespace anticipate
