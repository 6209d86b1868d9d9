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

#ifndef ANTICIPATE_CURVES_H_
#define ANTICIPATE_CURVES_H_

// Success-probability curves over a theta grid, analytic and simulated, and
// their CSV form:
//
//   theta,kind,k,analytic,empirical,stderr,shots,seed
//
// One row per (theta, scenario), theta-major, scenarios ordered standard
// k = 0, 1, 2 then anticipative k = 0, 1, 2. The last four columns are empty
// for analytic-only output. Numbers carry 12 significant digits.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anticipate/four_state_task.h"
#include "anticipate/shot_simulator.h"

namespace anticipate {

/// Raised for configurations that fail validation (exit code 2 in the CLI).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  double theta_min;
  double theta_max;
  std::size_t points = kDefaultGridPoints;
  int k = 1;
  std::size_t shots = kDefaultShots;
  std::uint64_t seed = kDefaultSeed;
  NoiseModel noise{0.0, kDefaultReadoutFlip};
  BasisSplit split = BasisSplit::kEqual;
  unsigned threads = 1;
  bool simulate = false;
  std::string output;  // empty or "-" means stdout
  double tolerance = kDefaultTolerance;

  RunConfig();
  /// Throws ConfigError.
  void validate() const;
  std::vector<double> thetas() const;
};

struct CurveRow {
  double theta;
  ScenarioId scenario;
  double analytic;
  std::optional<double> empirical;
  std::optional<double> std_error;
  std::optional<std::size_t> shots;
  std::optional<std::uint64_t> seed;
};

std::vector<CurveRow> compute_curves(const RunConfig &cfg);

void write_curves_csv(std::ostream &out, const std::vector<CurveRow> &rows);

/// compute_curves + write_curves_csv to cfg.output. Throws ConfigError when the
/// configuration is invalid and std::runtime_error when the output path cannot
/// be written.
std::vector<CurveRow> emit_curves(const RunConfig &cfg);

}  // namespace anticipate

#endif  // ANTICIPATE_CURVES_H_
