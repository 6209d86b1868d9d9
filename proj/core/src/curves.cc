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

#include "anticipate/curves.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "anticipate/csv.h"

namespace anticipate {

RunConfig::RunConfig()
    : theta_min(std::numbers::pi / 50), theta_max(std::numbers::pi / 2) {}

void RunConfig::validate() const {
  try {
    theta_grid(theta_min, theta_max, points);
    noise.validate();
  } catch (const std::invalid_argument &e) {
    throw ConfigError(e.what());
  }
  if (shots == 0) throw ConfigError("--shots must be at least 1");
  if (!(tolerance > 0.0)) throw ConfigError("--tol must be positive");
  if (k < 0 || k > 2) throw ConfigError("--k must be 0, 1 or 2");
  if (threads == 0) throw ConfigError("--threads must be at least 1");
}

std::vector<double> RunConfig::thetas() const {
  return theta_grid(theta_min, theta_max, points);
}

std::vector<CurveRow> compute_curves(const RunConfig &cfg) {
  cfg.validate();
  auto thetas = cfg.thetas();

  // [k] -> estimates ordered (theta, standard), (theta, anticipative), ...
  std::vector<std::vector<EmpiricalEstimate>> simulated;
  if (cfg.simulate) {
    auto plan = plan_experiment(thetas, cfg.shots, cfg.seed, cfg.split);
    auto tallies = simulate(plan, cfg.noise, cfg.threads);
    for (int k = 0; k <= 2; ++k) simulated.push_back(empirical_success(plan, tallies, k));
  }

  std::vector<CurveRow> rows;
  rows.reserve(thetas.size() * all_scenarios().size());
  for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
    TaskParams params(thetas[ti]);
    for (const auto &s : all_scenarios()) {
      CurveRow row{thetas[ti], s, closed_form(s, params), {}, {}, {}, {}};
      if (cfg.simulate) {
        const auto &e = simulated[s.k][2 * ti + (s.kind == MeasurementKind::kStandard ? 0 : 1)];
        row.empirical = e.value;
        row.std_error = e.std_error;
        row.shots = cfg.shots;
        row.seed = cfg.seed;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

void write_curves_csv(std::ostream &out, const std::vector<CurveRow> &rows) {
  out << "theta,kind,k,analytic,empirical,stderr,shots,seed\n";
  for (const auto &r : rows) {
    out << format_number(r.theta) << ',' << kind_name(r.scenario.kind) << ',' << r.scenario.k
        << ',' << format_number(r.analytic) << ',';
    if (r.empirical) out << format_number(*r.empirical);
    out << ',';
    if (r.std_error) out << format_number(*r.std_error);
    out << ',';
    if (r.shots) out << *r.shots;
    out << ',';
    if (r.seed) out << *r.seed;
    out << '\n';
  }
}

std::vector<CurveRow> emit_curves(const RunConfig &cfg) {
  auto rows = compute_curves(cfg);
  if (cfg.output.empty() || cfg.output == "-") {
    write_curves_csv(std::cout, rows);
    std::cout.flush();
    return rows;
  }
  std::ofstream file(cfg.output, std::ios::out | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file: " + cfg.output);
  write_curves_csv(file, rows);
  file.flush();
  if (!file) throw std::runtime_error("failed writing output file: " + cfg.output);
  return rows;
}

}  // namespace anticipate
