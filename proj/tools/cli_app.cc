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

#include "cli_app.h"

#include <fstream>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "anticipate/anticipative_solver.h"
#include "anticipate/csv.h"
#include "anticipate/curves.h"
#include "anticipate/four_state_task.h"
#include "anticipate/shot_simulator.h"
#include "anticipate/verify.h"

namespace anticipate::cli {

namespace {

std::string vec_string(const Vec3 &v) {
  return "(" + format_number(v[0]) + ", " + format_number(v[1]) + ", " + format_number(v[2]) +
         ")";
}

void add_grid_options(CLI::App &cmd, RunConfig &cfg) {
  cmd.add_option("--theta-min", cfg.theta_min, "Smallest grid angle in radians");
  cmd.add_option("--theta-max", cfg.theta_max, "Largest grid angle in radians");
  cmd.add_option("--points", cfg.points, "Number of grid points");
  cmd.add_option("--output", cfg.output, "CSV path, '-' for stdout");
}

void add_sim_options(CLI::App &cmd, RunConfig &cfg) {
  static const std::map<std::string, BasisSplit> splits{{"equal", BasisSplit::kEqual},
                                                         {"random", BasisSplit::kRandom}};
  cmd.add_option("--shots", cfg.shots, "Shots per circuit");
  cmd.add_option("--seed", cfg.seed, "Master seed");
  cmd.add_option("--noise-depol", cfg.noise.depolarizing, "Depolarizing strength p");
  cmd.add_option("--noise-readout", cfg.noise.readout_flip, "Readout flip probability");
  cmd.add_option("--threads", cfg.threads, "Worker threads");
  cmd.add_option("--basis-split", cfg.split, "How shots are split between bases")
      ->transform(CLI::CheckedTransformer(splits, CLI::ignore_case));
}

int run_solve(const RunConfig &cfg, double theta, std::ostream &out) {
  if (cfg.k != 1 && cfg.k != 2) throw ConfigError("solve needs --k 1 or --k 2");
  if (!(theta > 0.0 && theta <= std::numbers::pi / 2 + 1e-12)) {
    throw ConfigError("--theta must lie in (0, pi/2]");
  }
  auto aux = build_auxiliary(theta, cfg.k);
  auto arg = lambda_argmax(aux);
  TaskParams p(theta);
  auto dirs = anticipative_directions(p);
  std::size_t certified = 0;
  for (auto order : {PairOrder::kAB, PairOrder::kBA}) {
    if (certify_optimal(aux, theorem_measurement(theta, cfg.k, order).measurement,
                        std::max(cfg.tolerance, 1e-12))) {
      ++certified;
    }
  }
  out << "theta " << format_number(theta) << "\n"
      << "k " << cfg.k << "\n"
      << "Lambda " << format_number(arg.lambda) << "\n"
      << "C " << format_number(aux.normalization()) << "\n"
      << "success_2CLambda " << format_number(anticipative_success(aux)) << "\n"
      << "functions " << num_outcome_functions(cfg.k) << "\n"
      << "maximizers " << arg.maximizers.size() << "\n"
      << "certified_measurements " << certified << "/2\n"
      << "direction_m " << vec_string(dirs.m) << "\n"
      << "direction_n " << vec_string(dirs.n) << "\n"
      << "cos_omega " << format_number(cos_omega(p)) << "\n";
  return certified == 2 ? kExitOk : kExitVerifyFailed;
}

void dump_records(const RunConfig &cfg, const std::string &path) {
  auto plan = plan_experiment(cfg.thetas(), cfg.shots, cfg.seed, cfg.split);
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  bool header = true;
  for (const auto &run : plan.runs) {
    auto records = sample_run(plan, run, cfg.noise);
    if (header) {
      write_records_csv(file, records);
      header = false;
    } else {
      std::ostringstream chunk;
      write_records_csv(chunk, records);
      auto text = chunk.str();
      file << text.substr(text.find('\n') + 1);
    }
  }
  if (!file) throw std::runtime_error("failed writing " + path);
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  double theta = std::numbers::pi / 2;
  double tamper = 1.0;
  std::string records_path;

  CLI::App app{"Guessing games with posterior information on a four-state qubit task"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "anticipate 0.1.0");

  auto *curves = app.add_subcommand("curves", "Analytic success curves as CSV");
  add_grid_options(*curves, cfg);

  auto *solve = app.add_subcommand("solve", "Solve the auxiliary ensemble at one angle");
  solve->add_option("--theta", theta, "Angle in radians")->required();
  solve->add_option("--k", cfg.k, "Excluded wrong answers (1 or 2)")->required();
  solve->add_option("--tol", cfg.tolerance, "Certificate tolerance");

  auto *sim = app.add_subcommand("simulate", "Analytic and simulated curves as CSV");
  add_grid_options(*sim, cfg);
  add_sim_options(*sim, cfg);
  sim->add_option("--records", records_path, "Also write every shot to this CSV");

  auto *verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--tol", cfg.tolerance, "Tolerance for every check");
  verify->add_option("--tamper-normalization", tamper)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadConfig;
  }

  try {
    if (*curves || *sim) {
      cfg.command = *curves ? "curves" : "simulate";
      cfg.simulate = static_cast<bool>(*sim);
      if (cfg.output.empty() || cfg.output == "-") {
        write_curves_csv(out, compute_curves(cfg));
      } else {
        emit_curves(cfg);
      }
      if (!records_path.empty()) dump_records(cfg, records_path);
      return kExitOk;
    }
    if (*solve) {
      cfg.command = "solve";
      cfg.validate();
      return run_solve(cfg, theta, out);
    }
    cfg.command = "verify";
    if (!(cfg.tolerance > 0.0)) throw ConfigError("--tol must be positive");
    VerifyOptions options;
    options.tolerance = cfg.tolerance;
    options.tamper_normalization = tamper;
    auto report = run_verification(options);
    print_report(out, report);
    return report.passed() ? kExitOk : kExitVerifyFailed;
  } catch (const ConfigError &e) {
    err << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::runtime_error &e) {
    err << "error: " << e.what() << "\n";
    return kExitBadConfig;
  }
}

}  // namespace anticipate::cli
