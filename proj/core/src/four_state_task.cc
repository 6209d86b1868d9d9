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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace anticipate {

namespace {

// Slack on the closed upper bound so that grids computed as i*pi/50 still
// accept their last point.
constexpr double kThetaSlack = 1e-12;

double sqrt_ten_six(const TaskParams &p) { return std::sqrt(10.0 + 6.0 * p.cos_theta()); }

}  // namespace

const std::vector<Label> &input_labels() {
  static const std::vector<Label> labels{"+a", "-a", "+b", "-b"};
  return labels;
}

std::string_view kind_name(MeasurementKind kind) {
  return kind == MeasurementKind::kStandard ? "standard" : "anticipative";
}

MeasurementKind parse_kind(std::string_view name) {
  if (name == "standard") return MeasurementKind::kStandard;
  if (name == "anticipative") return MeasurementKind::kAnticipative;
  throw std::invalid_argument("unknown measurement kind: " + std::string(name));
}

const std::vector<Label> &outcome_labels(MeasurementKind kind) {
  static const std::vector<Label> standard{"+a", "-a", "+b", "-b"};
  static const std::vector<Label> anticipative{"+m", "-m", "+n", "-n"};
  return kind == MeasurementKind::kStandard ? standard : anticipative;
}

TaskParams::TaskParams(double theta) : theta_(theta) {
  if (!(theta > 0.0) || theta > std::numbers::pi / 2 + kThetaSlack) {
    std::ostringstream msg;
    msg << "theta must lie in (0, pi/2], got " << theta;
    throw std::invalid_argument(msg.str());
  }
}

double TaskParams::cos_theta() const { return std::cos(theta_); }

Vec3 TaskParams::a() const { return {std::cos(theta_ / 2), std::sin(theta_ / 2), 0.0}; }

Vec3 TaskParams::b() const { return {std::cos(theta_ / 2), -std::sin(theta_ / 2), 0.0}; }

Vec3 TaskParams::input_direction(std::size_t x) const {
  switch (x) {
    case kPlusA:
      return a();
    case kMinusA:
      return -1.0 * a();
    case kPlusB:
      return b();
    case kMinusB:
      return -1.0 * b();
  }
  throw std::out_of_range("input index out of range");
}

const std::array<ScenarioId, 6> &all_scenarios() {
  static const std::array<ScenarioId, 6> scenarios{{
      {MeasurementKind::kStandard, 0},
      {MeasurementKind::kStandard, 1},
      {MeasurementKind::kStandard, 2},
      {MeasurementKind::kAnticipative, 0},
      {MeasurementKind::kAnticipative, 1},
      {MeasurementKind::kAnticipative, 2},
  }};
  return scenarios;
}

StateEnsemble make_ensemble(const TaskParams &p) {
  std::vector<LabeledOp> states;
  for (std::size_t x = 0; x < kNumInputs; ++x) {
    states.push_back({input_labels()[x], {1.0 / 8, (1.0 / 8) * p.input_direction(x)}});
  }
  return StateEnsemble(std::move(states));
}

namespace {

Measurement two_basis_measurement(const std::vector<Label> &labels, const Vec3 &u,
                                  const Vec3 &v) {
  return Measurement({
      {labels[0], {0.25, 0.25 * u}},
      {labels[1], {0.25, -0.25 * u}},
      {labels[2], {0.25, 0.25 * v}},
      {labels[3], {0.25, -0.25 * v}},
  });
}

}  // namespace

Measurement standard_measurement(const TaskParams &p) {
  return two_basis_measurement(outcome_labels(MeasurementKind::kStandard), p.a(), p.b());
}

AnticipativeDirections anticipative_directions(const TaskParams &p) {
  double r = sqrt_ten_six(p);
  return {(1.0 / r) * (p.a() + 3.0 * p.b()), (1.0 / r) * (3.0 * p.a() + p.b())};
}

Measurement anticipative_measurement(const TaskParams &p) {
  auto d = anticipative_directions(p);
  return two_basis_measurement(outcome_labels(MeasurementKind::kAnticipative), d.m, d.n);
}

Measurement task_measurement(MeasurementKind kind, const TaskParams &p) {
  return kind == MeasurementKind::kStandard ? standard_measurement(p)
                                            : anticipative_measurement(p);
}

double cos_omega(const TaskParams &p) {
  double c = p.cos_theta();
  return (3.0 + 5.0 * c) / (5.0 + 3.0 * c);
}

double omega(const TaskParams &p) { return std::acos(std::min(1.0, cos_omega(p))); }

PQValues pq_values(const TaskParams &p) {
  double r = sqrt_ten_six(p);
  double c = p.cos_theta();
  double pf = (1.0 + 3.0 * c) / r;
  double qf = (c + 3.0) / r;
  return {(1.0 + pf) / 16, (1.0 - pf) / 16, (1.0 + qf) / 16, (1.0 - qf) / 16};
}

double closed_form(const ScenarioId &s, const TaskParams &p) {
  double half_cos_sq = std::pow(std::cos(p.theta() / 2), 2);
  if (s.kind == MeasurementKind::kStandard) {
    switch (s.k) {
      case 0:
        return 0.5;
      case 1:
        return (3.0 + half_cos_sq) / 6.0;
      case 2:
        return (4.0 + half_cos_sq) / 6.0;
    }
  } else {
    switch (s.k) {
      case 0:
        return 4.0 * pq_values(p).q_plus;
      case 1:
        return (4.0 + sqrt_ten_six(p)) / 12.0;
      case 2:
        return (6.0 + sqrt_ten_six(p)) / 12.0;
    }
  }
  throw std::invalid_argument("scenario k must be 0, 1 or 2");
}

std::vector<Label> PriorityTable::answer_labels(std::size_t z) const {
  std::vector<Label> out;
  for (std::size_t y : answers.at(z)) out.push_back(input_labels()[y]);
  return out;
}

const PriorityTable &priority_table(MeasurementKind kind) {
  static const PriorityTable standard{
      outcome_labels(MeasurementKind::kStandard),
      {{kPlusA, kPlusB, kMinusB, kMinusA},
       {kMinusA, kMinusB, kPlusB, kPlusA},
       {kPlusB, kPlusA, kMinusA, kMinusB},
       {kMinusB, kMinusA, kPlusA, kPlusB}}};
  // Rows for +m, -m, +n, -n.
  static const PriorityTable anticipative{
      outcome_labels(MeasurementKind::kAnticipative),
      {{kPlusB, kPlusA, kMinusA, kMinusB},
       {kMinusB, kMinusA, kPlusA, kPlusB},
       {kPlusA, kPlusB, kMinusB, kMinusA},
       {kMinusA, kMinusB, kPlusB, kPlusA}}};
  return kind == MeasurementKind::kStandard ? standard : anticipative;
}

GameSpec task_game(MeasurementKind kind, const TaskParams &p) {
  return GameSpec::discrimination(joint_table(make_ensemble(p), task_measurement(kind, p)));
}

double pipeline_success(const ScenarioId &s, const TaskParams &p) {
  if (s.k < 0 || s.k > 2) throw std::invalid_argument("scenario k must be 0, 1 or 2");
  auto game = task_game(s.kind, p);
  auto alpha = exclusion_info_map(game, static_cast<std::size_t>(s.k));
  auto nu = bayes_optimal_post(game, alpha);
  if (s.k == 0) return success_no_cpost(game, nu);
  return success_with_cpost(game, alpha, nu);
}

std::vector<double> theta_grid(double theta_min, double theta_max, std::size_t count) {
  if (count == 0) throw std::invalid_argument("theta grid needs at least one point");
  if (!(theta_min > 0.0) || theta_max > std::numbers::pi / 2 + kThetaSlack ||
      theta_min > theta_max) {
    std::ostringstream msg;
    msg << "theta grid [" << theta_min << ", " << theta_max << "] must lie in (0, pi/2]";
    throw std::invalid_argument(msg.str());
  }
  if (count == 1) return {theta_max};
  std::vector<double> grid(count);
  double step = (theta_max - theta_min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) grid[i] = theta_min + static_cast<double>(i) * step;
  grid.back() = theta_max;
  return grid;
}

std::vector<double> default_theta_grid() {
  std::vector<double> grid(kDefaultGridPoints);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = static_cast<double>(i + 1) * std::numbers::pi / 50.0;
  }
  return grid;
}

}  // namespace anticipate
