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

#include "anticipate/shot_simulator.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "oracle.h"

namespace anticipate {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr auto kKinds = {MeasurementKind::kStandard, MeasurementKind::kAnticipative};

/// Born probability of the + outcome with depolarizing and readout noise, in
/// the analytic frame.
double oracle_plus(double theta, std::size_t state, MeasurementKind kind, int basis,
                   double depol, double flip) {
  auto r = oracle::scaled(1.0 - depol, oracle::input_dir(theta, state));
  auto d = oracle::outcome_dir(theta, kind == MeasurementKind::kAnticipative,
                               static_cast<std::size_t>(2 * basis));
  auto rho = oracle::bloch(0.5, oracle::scaled(0.5, r));
  auto proj = oracle::bloch(0.5, oracle::scaled(0.5, d));
  double p0 = (rho * proj).trace().real();
  return p0 * (1 - flip) + (1 - p0) * flip;
}

std::vector<ShotRecord> all_records(const ExperimentPlan &plan, const NoiseModel &noise) {
  std::vector<ShotRecord> out;
  for (const auto &run : plan.runs) {
    auto r = sample_run(plan, run, noise);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

TEST(NoiseModel, Validation) {
  EXPECT_NO_THROW((NoiseModel{0.0, 0.0}).validate());
  EXPECT_NO_THROW((NoiseModel{1.0, 0.5}).validate());
  EXPECT_THROW((NoiseModel{-0.1, 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW((NoiseModel{1.1, 0.0}).validate(), std::invalid_argument);
  EXPECT_THROW((NoiseModel{0.0, 0.6}).validate(), std::invalid_argument);
}

TEST(PlusProbability, MatchesBornRuleWithNoise) {
  for (double t : oracle::grid()) {
    for (auto kind : kKinds) {
      for (std::size_t s = 0; s < 4; ++s) {
        for (int basis : {0, 1}) {
          for (auto [p, e] : {std::pair{0.0, 0.0}, {0.02, 0.023}, {0.5, 0.1}}) {
            EXPECT_NEAR(plus_probability(t, s, kind, basis, {p, e}),
                        oracle_plus(t, s, kind, basis, p, e), 1e-14);
          }
        }
      }
    }
  }
}

TEST(PlusProbability, AnticipativeEntryIsEightQPlus) {
  double t = kPi / 2;
  double c = std::cos(t);
  double q_plus = (1 + (c + 3) / std::sqrt(10 + 6 * c)) / 16;
  EXPECT_NEAR(plus_probability(t, kPlusA, MeasurementKind::kAnticipative, 1,
                               NoiseModel::noiseless()),
              8 * q_plus, 1e-14);
}

TEST(AngleSchedule, CircuitReproducesBornRule) {
  for (double t : {0.1, 0.8, kPi / 2}) {
    for (auto kind : kKinds) {
      for (std::size_t s = 0; s < 4; ++s) {
        for (int basis : {0, 1}) {
          auto a = angle_schedule(t, s, kind, basis);
          auto u = oracle::ry(-a.measurement) * oracle::ry(a.preparation);
          double p0 = std::norm(u.a00);
          EXPECT_NEAR(p0, oracle_plus(t, s, kind, basis, 0.0, 0.0), 1e-14);
        }
      }
    }
  }
}

TEST(DeriveStreamSeed, DeterministicAndDistinct) {
  EXPECT_EQ(derive_stream_seed(7, 3), derive_stream_seed(7, 3));
  EXPECT_NE(derive_stream_seed(7, 3), derive_stream_seed(7, 4));
  EXPECT_NE(derive_stream_seed(7, 3), derive_stream_seed(8, 3));
}

TEST(PlanExperiment, LayoutAndErrors) {
  auto plan = plan_experiment(default_theta_grid(), 100, 5);
  ASSERT_EQ(plan.runs.size(), 400u);
  const auto &r = plan.runs[17];  // theta 1, state 0, kind 0, basis 1
  EXPECT_EQ(r.index, 17u);
  EXPECT_EQ(r.theta_index, 1u);
  EXPECT_EQ(r.state, 0u);
  EXPECT_EQ(r.kind, MeasurementKind::kStandard);
  EXPECT_EQ(r.basis, 1);
  EXPECT_EQ(plan.runs[2].kind, MeasurementKind::kAnticipative);
  EXPECT_EQ(plan.runs[4].state, 1u);
  EXPECT_EQ(r.stream_seed, derive_stream_seed(5, 17));
  EXPECT_THROW(plan_experiment({}, 100, 5), std::invalid_argument);
  EXPECT_THROW(plan_experiment({0.5}, 0, 5), std::invalid_argument);
  EXPECT_THROW(plan_experiment({2.0}, 10, 5), std::invalid_argument);
}

TEST(SampleRun, ReproducibleRecordsWithLineage) {
  auto plan = plan_experiment({0.6}, 500, 99);
  NoiseModel noise{0.02, 0.023};
  const auto &run = plan.runs[5];
  auto first = sample_run(plan, run, noise);
  auto second = sample_run(plan, run, noise);
  ASSERT_EQ(first.size(), 500u);
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].bit, second[i].bit);
    EXPECT_EQ(first[i].outcome, static_cast<std::size_t>(2 * first[i].basis + first[i].bit));
    EXPECT_EQ(first[i].run_index, 5u);
    EXPECT_EQ(first[i].master_seed, 99u);
    EXPECT_EQ(first[i].stream_seed, run.stream_seed);
    EXPECT_EQ(first[i].shot, i);
    EXPECT_EQ(first[i].basis, run.basis);
  }
}

TEST(SampleRun, DifferentSeedsGiveDifferentStreams) {
  auto a = plan_experiment({0.6}, 200, 1);
  auto b = plan_experiment({0.6}, 200, 2);
  // Run 1 measures +a in the b basis, so its bits are random.
  auto ra = sample_run(a, a.runs[1], NoiseModel::noiseless());
  auto rb = sample_run(b, b.runs[1], NoiseModel::noiseless());
  int differ = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) differ += ra[i].bit != rb[i].bit;
  EXPECT_GT(differ, 0);
}

TEST(Simulate, TalliesMatchRecordsAndIgnoreThreadCount) {
  auto plan = plan_experiment({0.3, 1.2}, 300, 42);
  NoiseModel noise{0.02, 0.023};
  auto one = simulate(plan, noise, 1);
  auto four = simulate(plan, noise, 4);
  ASSERT_EQ(one.size(), plan.runs.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].run_index, i);
    EXPECT_EQ(one[i].outcome_counts, four[i].outcome_counts);
    std::array<std::size_t, 4> from_records{};
    for (const auto &r : sample_run(plan, plan.runs[i], noise)) ++from_records[r.outcome];
    EXPECT_EQ(one[i].outcome_counts, from_records);
    EXPECT_EQ(tally_run(plan, plan.runs[i], noise).outcome_counts, from_records);
  }
}

TEST(ShotScore, Values) {
  // Standard, k = 0: the guess is the outcome itself.
  EXPECT_EQ(shot_score(MeasurementKind::kStandard, 0, kPlusA, 0), 1.0);
  EXPECT_EQ(shot_score(MeasurementKind::kStandard, 0, kPlusA, 2), 0.0);
  // Standard, k = 1, input +a, outcome +b: priority is +b, +a, -a, -b, and of
  // the sets {-a}, {+b}, {-b} only {+b} leads to the guess +a.
  EXPECT_NEAR(shot_score(MeasurementKind::kStandard, 1, kPlusA, 2), 1.0 / 3, 1e-15);
  EXPECT_NEAR(shot_score(MeasurementKind::kStandard, 1, kPlusA, 0), 1.0, 1e-15);
  // Anticipative, k = 0: +n is guessed as +a.
  EXPECT_EQ(shot_score(MeasurementKind::kAnticipative, 0, kPlusA, 2), 1.0);
}

TEST(EmpiricalSuccess, RecordsAndTalliesAgree) {
  auto plan = plan_experiment({0.3, 1.2}, 400, 8);
  NoiseModel noise{0.0, 0.023};
  auto records = all_records(plan, noise);
  auto tallies = simulate(plan, noise);
  for (int k : {0, 1, 2}) {
    auto a = empirical_success(records, k);
    auto b = empirical_success(plan, tallies, k);
    ASSERT_EQ(a.size(), 4u);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_NEAR(a[i].value, b[i].value, 1e-14);
      EXPECT_NEAR(a[i].std_error, b[i].std_error, 1e-14);
      EXPECT_EQ(a[i].shots, b[i].shots);
    }
    EXPECT_EQ(a[0].kind, MeasurementKind::kStandard);
    EXPECT_EQ(a[1].kind, MeasurementKind::kAnticipative);
  }
}

TEST(EmpiricalSuccess, UnbalancedBasesAreRejected) {
  auto plan = plan_experiment({0.5}, 50, 3);
  auto records = all_records(plan, NoiseModel::noiseless());
  std::vector<ShotRecord> unbalanced;
  for (const auto &r : records) {
    if (!(r.basis == 1 && r.shot >= 40)) unbalanced.push_back(r);
  }
  EXPECT_THROW(empirical_success(unbalanced, 1), std::invalid_argument);
  EXPECT_NO_THROW(empirical_success(unbalanced, 1, BasisSplit::kRandom));
}

TEST(EmpiricalSuccess, WithinFourSigmaOfExpectedValue) {
  auto plan = plan_experiment({0.2, 0.9, kPi / 2}, 20000, kDefaultSeed);
  auto noise = NoiseModel::noiseless();
  auto tallies = simulate(plan, noise);
  for (int k : {0, 1, 2}) {
    for (const auto &e : empirical_success(plan, tallies, k)) {
      double expected = expected_success(e.theta, e.kind, k, noise);
      EXPECT_LE(std::abs(e.value - expected), 4 * e.std_error)
          << kind_name(e.kind) << " k=" << k << " t=" << e.theta;
      // Noiseless standard k = 0 scores every shot deterministically.
      bool deterministic = k == 0 && e.kind == MeasurementKind::kStandard;
      EXPECT_EQ(e.std_error == 0.0, deterministic);
    }
  }
}

TEST(EmpiricalSuccess, RandomSplitEstimatesTheSameQuantity) {
  auto plan = plan_experiment({1.0}, 20000, 77, BasisSplit::kRandom);
  auto noise = NoiseModel::noiseless();
  auto records = all_records(plan, noise);
  std::size_t basis1 = 0;
  for (const auto &r : records) basis1 += r.basis == 1;
  EXPECT_NEAR(static_cast<double>(basis1) / records.size(), 0.5, 0.01);
  for (int k : {1, 2}) {
    for (const auto &e : empirical_success(records, k, BasisSplit::kRandom)) {
      EXPECT_LE(std::abs(e.value - expected_success(1.0, e.kind, k, noise)), 4 * e.std_error);
    }
  }
}

TEST(ExpectedSuccess, NoiselessMatchesClosedForm) {
  for (double t : oracle::grid()) {
    for (int k : {0, 1, 2}) {
      EXPECT_NEAR(expected_success(t, MeasurementKind::kStandard, k, NoiseModel::noiseless()),
                  oracle::st(k, t), 1e-13);
      EXPECT_NEAR(
          expected_success(t, MeasurementKind::kAnticipative, k, NoiseModel::noiseless()),
          oracle::an(k, t), 1e-13);
    }
  }
}

TEST(ExpectedSuccess, DecreasesWithNoise) {
  for (double t : {0.3, kPi / 2}) {
    for (auto kind : kKinds) {
      for (int k : {1, 2}) {
        double prev = 2.0;
        for (double p : {0.0, 0.05, 0.2, 0.5}) {
          double v = expected_success(t, kind, k, {p, 0.023});
          EXPECT_LT(v, prev);
          prev = v;
        }
        EXPECT_LT(expected_success(t, kind, k, {0.0, 0.1}),
                  expected_success(t, kind, k, {0.0, 0.0}));
      }
    }
  }
}

TEST(EmpiricalSuccess, DecreasesWithNoiseAtMillionShots) {
  // 16 runs of 62500 shots: one million shots per noise level.
  auto plan = plan_experiment({kPi / 2}, 62500, 5);
  for (int k : {1, 2}) {
    double prev_st = 2.0, prev_an = 2.0;
    for (double p : {0.0, 0.1, 0.3}) {
      auto est = empirical_success(plan, simulate(plan, {p, 0.023}), k);
      EXPECT_LT(est[0].value, prev_st);
      EXPECT_LT(est[1].value, prev_an);
      prev_st = est[0].value;
      prev_an = est[1].value;
    }
  }
}

TEST(WriteRecordsCsv, HeaderAndStability) {
  auto plan = plan_experiment({0.5}, 3, 11);
  auto records = all_records(plan, NoiseModel::noiseless());
  std::ostringstream a, b;
  write_records_csv(a, records);
  write_records_csv(b, all_records(plan, NoiseModel::noiseless()));
  EXPECT_EQ(a.str(), b.str());
  auto text = a.str();
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "theta,state,kind,basis,bit,outcome,master_seed,run_index,stream_seed,shot");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 16 * 3);
}

TEST(Decomposition, IdentityHoldsUpToGlobalPhase) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    double t = u(rng);
    auto lhs = oracle::ry(t);
    auto rhs = oracle::kI * oracle::sqrt_x() * oracle::rz(kPi - t) * oracle::sqrt_x() *
               oracle::rz(kPi);
    EXPECT_LT(oracle::phase_distance(lhs, rhs), 1e-12);
    EXPECT_LT(decomposition_residual(t), 1e-12);
    EXPECT_TRUE(native_decomposition_check(t));
  }
  EXPECT_TRUE(native_decomposition_check(0.0));
}

}  // namespace
}  // namespace anticipate
