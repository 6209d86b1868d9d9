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

#include "anticipate/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "anticipate/anticipative_solver.h"
#include "anticipate/curves.h"
#include "anticipate/csv.h"
#include "anticipate/four_state_task.h"
#include "anticipate/guessing_game.h"
#include "anticipate/shot_simulator.h"

namespace anticipate {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tracks the worst deviation seen by one check.
class Tally {
 public:
  void observe(double deviation, const std::string &what) {
    if (std::isnan(deviation)) deviation = kInf;
    if (deviation > worst_) {
      worst_ = deviation;
      worst_what_ = what;
    }
  }
  void fail(const std::string &what) { observe(kInf, what); }

  CheckResult result(std::string name, double tol, std::vector<std::string> ops) const {
    CheckResult r;
    r.name = std::move(name);
    r.max_deviation = worst_;
    r.passed = worst_ <= tol;
    r.detail = worst_what_.empty() ? "exact" : "worst at " + worst_what_;
    r.operations = std::move(ops);
    return r;
  }

 private:
  double worst_ = 0.0;
  std::string worst_what_;
};

std::string at_theta(double theta) { return "theta=" + format_number(theta); }

std::string scenario_name(const ScenarioId &s) {
  return std::string(kind_name(s.kind)) + " k=" + std::to_string(s.k);
}

std::vector<double> sampled(const std::vector<double> &thetas, std::size_t count) {
  if (thetas.size() <= count) return thetas;
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(thetas[i * (thetas.size() - 1) / (count - 1)]);
  }
  return out;
}

CheckResult check_operator_identities(double tol) {
  Tally t;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto random_op = [&] { return HermitianOp{u(rng), {u(rng), u(rng), u(rng)}}; };
  for (int i = 0; i < 100; ++i) {
    auto a = random_op(), b = random_op(), c = random_op();
    double s = u(rng);
    t.observe(std::abs(trace_product(a, b) - trace_product(b, a)), "trace_product symmetry");
    t.observe(std::abs(trace_product(a + s * b, c) -
                       (trace_product(a, c) + s * trace_product(b, c))),
              "trace_product linearity");
  }
  for (double theta : {std::numbers::pi / 50, std::numbers::pi / 4, std::numbers::pi / 2}) {
    TaskParams p(theta);
    auto st = validate_measurement(standard_measurement(p), tol);
    auto an = validate_measurement(anticipative_measurement(p), tol);
    t.observe(st.completeness_deviation, "standard completeness " + at_theta(theta));
    t.observe(an.completeness_deviation, "anticipative completeness " + at_theta(theta));
    if (!st.valid || !an.valid) t.fail("measurement validity " + at_theta(theta));
    auto proj = projector(anticipative_directions(p).n);
    t.observe(std::abs(trace_product(proj, proj) - 1.0), "projector idempotence");
    t.observe(std::abs(proj.trace() - 1.0), "projector trace");
  }
  return t.result("operator-identities", tol,
                  {"trace_product", "validate_measurement", "projector", "standard_measurement",
                   "anticipative_measurement", "anticipative_directions"});
}

CheckResult check_closed_forms(const std::vector<double> &thetas, double tol) {
  Tally t;
  for (double theta : thetas) {
    TaskParams p(theta);
    for (const auto &s : all_scenarios()) {
      t.observe(std::abs(pipeline_success(s, p) - closed_form(s, p)),
                scenario_name(s) + " " + at_theta(theta));
    }
    auto pq = pq_values(p);
    t.observe(std::abs(closed_form({MeasurementKind::kAnticipative, 0}, p) - 4.0 * pq.q_plus),
              "4 Q+ identity " + at_theta(theta));
    auto game = task_game(MeasurementKind::kAnticipative, p);
    for (std::size_t x = 0; x < kNumInputs; ++x) {
      t.observe(std::abs(game.joint().row_sum(x) - 0.25), "row sum " + at_theta(theta));
    }
  }
  return t.result("closed-form-equivalence", tol,
                  {"make_ensemble", "joint_table", "exclusion_info_map", "bayes_optimal_post",
                   "success_with_cpost", "success_no_cpost", "closed_form", "pq_values"});
}

// Max of gamma over the integer box the count vectors are known to live in.
double feasible_box_max(int k, double ip) {
  double best = 0.0;
  for (int ap = 0; ap <= 3; ++ap)
    for (int am = 0; am <= 3; ++am)
      for (int bp = 0; bp <= 3; ++bp)
        for (int bm = 0; bm <= 3; ++bm) {
          CountVector c{ap, am, bp, bm};
          if (is_feasible(c, k)) best = std::max(best, gamma(c, ip));
        }
  return best;
}

CheckResult check_enumeration(const std::vector<double> &thetas, double tol) {
  Tally t;
  for (int k : {1, 2}) {
    if (enumerate_functions(k).size() != (k == 1 ? 256u : 4096u)) t.fail("function count");
    for (double theta : thetas) {
      auto aux = build_auxiliary(theta, k);
      auto arg = lambda_argmax(aux);
      double scale = 24.0 * aux.normalization();
      double expected = gamma_max_closed_form(k, std::cos(theta));
      std::string where = "k=" + std::to_string(k) + " " + at_theta(theta);
      t.observe(std::abs(scale * arg.lambda - expected), "24C Lambda " + where);
      t.observe(std::abs(scale * aux.lambda() - expected), "top eigenvalue scan " + where);
      t.observe(std::abs(feasible_box_max(k, aux.inner_product()) - expected),
                "feasible-box maximum " + where);
      t.observe(std::abs(aux.total_trace() - 1.0), "normalization " + where);
      t.observe(std::abs(aux.delta() - 1.0), "Delta " + where);
      for (const auto &phi : enumerate_functions(k)) {
        if (!is_feasible(counts(phi, k), k)) t.fail("infeasible counts " + where);
      }
      for (auto order : {PairOrder::kAB, PairOrder::kBA}) {
        for (int sign : {+1, -1}) {
          auto idx = theorem_function(k, order, sign).index();
          if (!std::binary_search(arg.maximizers.begin(), arg.maximizers.end(), idx)) {
            t.fail("theorem function not a maximizer " + where);
          }
        }
      }
    }
  }
  return t.result("enumeration-oracle", tol,
                  {"enumerate_functions", "counts", "gamma", "build_auxiliary", "lambda_argmax"});
}

CheckResult check_certificates(const std::vector<double> &thetas, double tol, double tamper) {
  Tally t;
  for (int k : {1, 2}) {
    for (double theta : sampled(thetas, 5)) {
      auto aux = build_auxiliary(theta, k);
      if (tamper != 1.0) aux = aux.with_tampered_normalization(tamper);
      auto ab = theorem_measurement(theta, k, PairOrder::kAB);
      auto ba = theorem_measurement(theta, k, PairOrder::kBA);
      auto mixed = FunctionMeasurement::mix(0.5, ab.measurement, ba.measurement);
      std::string where = "k=" + std::to_string(k) + " " + at_theta(theta);
      for (const auto *m : {&ab.measurement, &ba.measurement, &mixed}) {
        t.observe(certificate_residual(aux, *m), "certificate " + where);
        if (!certify_optimal(aux, *m, std::max(tol, 1e-12))) t.observe(kInf, "certify " + where);
        t.observe(std::abs(auxiliary_success(aux, *m) - 2.0 * aux.lambda()),
                  "auxiliary bound " + where);
      }
      TaskParams p(theta);
      t.observe(std::abs(anticipative_success(aux) -
                         closed_form({MeasurementKind::kAnticipative, k}, p)),
                "2 C Lambda " + where);
    }
  }
  return t.result("optimality-certificate", tol,
                  {"theorem_measurement", "certify_optimal", "anticipative_success"});
}

CheckResult check_reduction(const std::vector<double> &thetas, double tol) {
  Tally t;
  for (int k : {1, 2}) {
    for (double theta : sampled(thetas, 5)) {
      TaskParams p(theta);
      auto aux = build_auxiliary(theta, k);
      auto red = reduce_to_povm(aux, theorem_measurement(theta, k, PairOrder::kAB),
                                theorem_measurement(theta, k, PairOrder::kBA),
                                std::max(tol, 1e-12));
      std::string where = "k=" + std::to_string(k) + " " + at_theta(theta);
      auto expected = anticipative_measurement(p);
      for (std::size_t z = 0; z < 4; ++z) {
        t.observe(max_abs_difference(red.povm.effects()[z].op, expected.effects()[z].op),
                  "M^an effect " + where);
      }
      const auto &priority = priority_table(MeasurementKind::kAnticipative);
      for (const auto &s : red.sets) {
        for (std::size_t z = 0; z < 4; ++z) {
          if (red.post.guess(s, z) != priority_guess(priority.answers[z], s)) {
            t.fail("post-processing vs priority table " + where);
          }
        }
      }
      auto game = GameSpec::discrimination(joint_table(make_ensemble(p), red.povm));
      auto alpha = exclusion_info_map(game, static_cast<std::size_t>(k));
      t.observe(std::abs(success_with_cpost(game, alpha, red.post) - anticipative_success(aux)),
                "reduced success " + where);
    }
  }
  return t.result("reduction-consistency", tol,
                  {"reduce_to_povm", "priority_table", "anticipative_measurement"});
}

CheckResult check_chain(const std::vector<double> &thetas, double tol) {
  Tally t;
  for (double theta : thetas) {
    TaskParams p(theta);
    double an0 = closed_form({MeasurementKind::kAnticipative, 0}, p);
    double st0 = closed_form({MeasurementKind::kStandard, 0}, p);
    for (int k : {1, 2}) {
      double stk = closed_form({MeasurementKind::kStandard, k}, p);
      double ank = closed_form({MeasurementKind::kAnticipative, k}, p);
      std::string where = "k=" + std::to_string(k) + " " + at_theta(theta);
      t.observe(std::max(0.0, an0 - st0), "an0 <= st0 " + where);
      t.observe(std::max(0.0, st0 - stk), "st0 <= stk " + where);
      t.observe(std::max(0.0, stk - ank), "stk <= ank " + where);
      if (!(ank - stk > 0.0)) t.fail("no anticipative advantage " + where);
    }
    if (!(an0 < st0)) t.fail("no penalty without posterior information " + at_theta(theta));
  }
  return t.result("inequality-chain", tol, {"closed_form"});
}

CheckResult check_decomposition(double tol) {
  Tally t;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  std::vector<double> angles{0.0, std::numbers::pi / 2};
  for (int i = 0; i < 100; ++i) angles.push_back(u(rng));
  for (double theta : angles) {
    t.observe(decomposition_residual(theta), at_theta(theta));
    if (!native_decomposition_check(theta, std::max(tol, 1e-12))) t.fail(at_theta(theta));
  }
  return t.result("decomposition-identity", tol, {"native_decomposition_check"});
}

CheckResult check_simulator(const std::vector<double> &thetas, double tol) {
  Tally t;
  auto noiseless = NoiseModel::noiseless();
  for (double theta : thetas) {
    TaskParams p(theta);
    for (const auto &s : all_scenarios()) {
      t.observe(std::abs(expected_success(theta, s.kind, s.k, noiseless) - closed_form(s, p)),
                "exact-weight " + scenario_name(s) + " " + at_theta(theta));
    }
    auto sched = angle_schedule(theta, kPlusA, MeasurementKind::kStandard, 0);
    t.observe(std::abs(sched.measurement - theta / 2), "angle schedule " + at_theta(theta));
  }
  TaskParams right(std::numbers::pi / 2);
  t.observe(std::abs(plus_probability(right.theta(), kPlusA, MeasurementKind::kAnticipative, 1,
                                      noiseless) -
                     8.0 * pq_values(right).q_plus),
            "P(+n | +a) = 8 Q+");

  auto plan = plan_experiment({std::numbers::pi / 2}, 64, kDefaultSeed);
  if (plan.runs.size() != 16) t.fail("plan size");
  NoiseModel noise{0.02, kDefaultReadoutFlip};
  std::vector<ShotRecord> first, second;
  for (const auto &run : plan.runs) {
    auto a = sample_run(plan, run, noise);
    auto b = sample_run(plan, run, noise);
    first.insert(first.end(), a.begin(), a.end());
    second.insert(second.end(), b.begin(), b.end());
    auto tally = tally_run(plan, run, noise);
    std::array<std::size_t, 4> from_records{};
    for (const auto &r : a) ++from_records[r.outcome];
    if (from_records != tally.outcome_counts) t.fail("records vs tally");
  }
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i].bit != second[i].bit) t.fail("sampling is not reproducible");
  }
  auto from_records = empirical_success(first, 1);
  auto from_tallies = empirical_success(plan, simulate(plan, noise), 1);
  for (std::size_t i = 0; i < from_records.size(); ++i) {
    t.observe(std::abs(from_records[i].value - from_tallies[i].value), "records vs tallies");
  }
  return t.result("simulator-consistency", tol,
                  {"plan_experiment", "sample_run", "empirical_success", "angle_schedule"});
}

CheckResult check_curves(double tol) {
  Tally t;
  RunConfig cfg;
  cfg.points = 3;
  auto rows = compute_curves(cfg);
  if (rows.size() != 18) t.fail("row count");
  for (const auto &r : rows) {
    t.observe(std::abs(r.analytic - closed_form(r.scenario, TaskParams(r.theta))),
              scenario_name(r.scenario) + " " + at_theta(r.theta));
    if (r.empirical) t.fail("analytic-only row has an empirical value");
  }
  return t.result("curves-analytic", tol, {"emit_curves"});
}

}  // namespace

bool VerifyReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
}

std::set<std::string> VerifyReport::operations_exercised() const {
  std::set<std::string> ops{"verify"};
  for (const auto &c : checks) ops.insert(c.operations.begin(), c.operations.end());
  return ops;
}

const CheckResult *VerifyReport::find(const std::string &name) const {
  for (const auto &c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::vector<std::string> &operation_names() {
  static const std::vector<std::string> names{
      // qubit operators
      "trace_product", "validate_measurement", "projector", "joint_table",
      // guessing game
      "exclusion_info_map", "success_with_cpost", "success_no_cpost", "bayes_optimal_post",
      // auxiliary ensemble
      "enumerate_functions", "counts", "gamma", "build_auxiliary", "lambda_argmax",
      "theorem_measurement", "certify_optimal", "reduce_to_povm", "anticipative_success",
      // four-state task
      "make_ensemble", "standard_measurement", "anticipative_directions",
      "anticipative_measurement", "pq_values", "closed_form", "priority_table",
      // simulator
      "plan_experiment", "sample_run", "empirical_success", "angle_schedule",
      "native_decomposition_check",
      // front end
      "emit_curves", "verify"};
  return names;
}

VerifyReport run_verification(const VerifyOptions &options) {
  auto thetas = options.thetas.empty() ? default_theta_grid() : options.thetas;
  double tol = options.tolerance;
  VerifyReport report;
  report.tolerance = tol;
  report.checks.push_back(check_operator_identities(tol));
  report.checks.push_back(check_closed_forms(thetas, tol));
  report.checks.push_back(check_enumeration(thetas, tol));
  report.checks.push_back(check_certificates(thetas, tol, options.tamper_normalization));
  report.checks.push_back(check_reduction(thetas, tol));
  report.checks.push_back(check_chain(thetas, tol));
  report.checks.push_back(check_decomposition(tol));
  report.checks.push_back(check_simulator(thetas, tol));
  report.checks.push_back(check_curves(tol));
  return report;
}

void print_report(std::ostream &out, const VerifyReport &report) {
  std::size_t failed = 0;
  for (const auto &c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name
        << " max_dev=" << format_number(c.max_deviation) << " (" << c.detail << ")\n";
    if (!c.passed) ++failed;
  }
  out << (failed == 0 ? "verification passed" : "verification FAILED") << ": "
      << report.checks.size() - failed << "/" << report.checks.size()
      << " checks at tol=" << format_number(report.tolerance) << "\n";
}

}  // namespace anticipate
