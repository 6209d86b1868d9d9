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

#ifndef ANTICIPATE_FOUR_STATE_TASK_H_
#define ANTICIPATE_FOUR_STATE_TASK_H_

// Discrimination of the four qubit states +-a, +-b, where a and b lie in the
// x-y plane of the Bloch ball at angles +-theta/2 from the x axis.

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "anticipate/guessing_game.h"
#include "anticipate/qubit_operators.h"

namespace anticipate {

/// Input (and answer) indices, in table order.
enum InputIndex : std::size_t { kPlusA = 0, kMinusA = 1, kPlusB = 2, kMinusB = 3 };

inline constexpr std::size_t kNumInputs = 4;

/// Labels "+a", "-a", "+b", "-b".
const std::vector<Label> &input_labels();

enum class MeasurementKind { kStandard, kAnticipative };

std::string_view kind_name(MeasurementKind kind);
/// Throws std::invalid_argument for anything other than the two names.
MeasurementKind parse_kind(std::string_view name);

/// Outcome labels: +-a, +-b for the standard measurement and +-m, +-n (in that
/// order) for the anticipative one.
const std::vector<Label> &outcome_labels(MeasurementKind kind);

/// theta in (0, pi/2].
class TaskParams {
 public:
  /// Throws std::invalid_argument outside (0, pi/2].
  explicit TaskParams(double theta);

  double theta() const { return theta_; }
  double cos_theta() const;
  Vec3 a() const;
  Vec3 b() const;
  /// Bloch vector of input x (one of +-a, +-b).
  Vec3 input_direction(std::size_t x) const;

 private:
  double theta_;
};

struct ScenarioId {
  MeasurementKind kind;
  int k;  // number of excluded wrong answers, 0..2

  friend bool operator==(const ScenarioId &, const ScenarioId &) = default;
};

/// The six scenarios, standard before anticipative, k ascending.
const std::array<ScenarioId, 6> &all_scenarios();

StateEnsemble make_ensemble(const TaskParams &p);

/// (1/4)(1 +- a.sigma), (1/4)(1 +- b.sigma).
Measurement standard_measurement(const TaskParams &p);

struct AnticipativeDirections {
  Vec3 m;  // (a + 3b)/|a + 3b|
  Vec3 n;  // (3a + b)/|3a + b|
};
AnticipativeDirections anticipative_directions(const TaskParams &p);

/// (1/4)(1 +- m.sigma), (1/4)(1 +- n.sigma) on outcomes +m, -m, +n, -n.
Measurement anticipative_measurement(const TaskParams &p);

Measurement task_measurement(MeasurementKind kind, const TaskParams &p);

/// cos(omega) = m.n = (3 + 5 cos theta)/(5 + 3 cos theta).
double cos_omega(const TaskParams &p);
double omega(const TaskParams &p);

struct PQValues {
  double p_plus;
  double p_minus;
  double q_plus;
  double q_minus;
};
PQValues pq_values(const TaskParams &p);

/// Closed-form optimal success probability for a scenario.
double closed_form(const ScenarioId &s, const TaskParams &p);

/// Per outcome (in outcome_labels(kind) order), the answers ordered from the
/// closest state to the orthogonal one.
struct PriorityTable {
  std::vector<Label> outcomes;
  std::vector<std::vector<std::size_t>> answers;

  std::vector<Label> answer_labels(std::size_t z) const;
};
const PriorityTable &priority_table(MeasurementKind kind);

/// Discrimination game (Y = X, f = delta) for the given measurement.
GameSpec task_game(MeasurementKind kind, const TaskParams &p);

/// Born table -> uniform exclusion of k answers -> Bayes-optimal guess ->
/// success functional. The generic route that closed_form() must agree with.
double pipeline_success(const ScenarioId &s, const TaskParams &p);

/// `count` equally spaced angles from theta_min to theta_max inclusive; the
/// defaults give i*pi/50 for i = 1..25. Throws std::invalid_argument for an
/// empty grid or bounds outside (0, pi/2].
std::vector<double> theta_grid(double theta_min, double theta_max, std::size_t count);
std::vector<double> default_theta_grid();

inline constexpr std::size_t kDefaultGridPoints = 25;

}  // namespace anticipate

#endif  // ANTICIPATE_FOUR_STATE_TASK_H_
