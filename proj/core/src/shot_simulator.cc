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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "anticipate/csv.h"

namespace anticipate {

void NoiseModel::validate() const {
  if (!(depolarizing >= 0.0 && depolarizing <= 1.0)) {
    throw std::invalid_argument("depolarizing strength must lie in [0, 1]");
  }
  if (!(readout_flip >= 0.0 && readout_flip <= 0.5)) {
    throw std::invalid_argument("readout flip probability must lie in [0, 1/2]");
  }
}

AngleSchedule angle_schedule(double theta, std::size_t state, MeasurementKind kind, int basis) {
  TaskParams params(theta);
  if (basis != 0 && basis != 1) throw std::invalid_argument("basis must be 0 or 1");
  const double half = theta / 2;
  double preparation = 0.0;
  switch (state) {
    case kPlusA:
      preparation = half;
      break;
    case kMinusA:
      preparation = half + std::numbers::pi;
      break;
    case kPlusB:
      preparation = -half;
      break;
    case kMinusB:
      preparation = std::numbers::pi - half;
      break;
    default:
      throw std::invalid_argument("state index out of range");
  }
  double measurement;
  if (kind == MeasurementKind::kStandard) {
    measurement = basis == 0 ? half : -half;  // +-a, +-b
  } else {
    double w = omega(params) / 2;
    measurement = basis == 0 ? -w : w;  // +-m, +-n
  }
  return {preparation, measurement};
}

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::size_t run_index) {
  const auto run = static_cast<std::uint64_t>(run_index);
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(run), static_cast<std::uint32_t>(run >> 32)};
  std::array<std::uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return (static_cast<std::uint64_t>(words[1]) << 32) | words[0];
}

ExperimentPlan plan_experiment(std::vector<double> thetas, std::size_t shots_per_run,
                               std::uint64_t master_seed, BasisSplit split) {
  if (thetas.empty()) throw std::invalid_argument("experiment needs at least one angle");
  if (shots_per_run == 0) throw std::invalid_argument("shots per run must be at least 1");
  for (double t : thetas) TaskParams{t};

  ExperimentPlan plan{std::move(thetas), shots_per_run, master_seed, split, {}};
  plan.runs.reserve(plan.thetas.size() * kNumInputs * 4);
  for (std::size_t ti = 0; ti < plan.thetas.size(); ++ti) {
    for (std::size_t state = 0; state < kNumInputs; ++state) {
      for (auto kind : {MeasurementKind::kStandard, MeasurementKind::kAnticipative}) {
        for (int basis = 0; basis < 2; ++basis) {
          std::size_t index = plan.runs.size();
          plan.runs.push_back({index, ti, plan.thetas[ti], state, kind, basis,
                               derive_stream_seed(master_seed, index)});
        }
      }
    }
  }
  return plan;
}

double plus_probability(double theta, std::size_t state, MeasurementKind kind, int basis,
                        const NoiseModel &noise) {
  noise.validate();
  auto angles = angle_schedule(theta, state, kind, basis);
  // R_y(prep)|0>, then R_y(-meas) before the z measurement.
  double x = std::sin(angles.preparation);
  double z = std::cos(angles.preparation);
  double phi = -angles.measurement;
  double z_rot = -x * std::sin(phi) + z * std::cos(phi);
  double p0 = 0.5 * (1.0 + (1.0 - noise.depolarizing) * z_rot);
  p0 = std::clamp(p0, 0.0, 1.0);
  return p0 * (1.0 - noise.readout_flip) + (1.0 - p0) * noise.readout_flip;
}

namespace {

double uniform01(std::mt19937_64 &engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// Calls emit(shot, basis, bit) for every shot of the run.
template <typename Emit>
void run_shots(const ExperimentPlan &plan, const RunSpec &run, const NoiseModel &noise,
               Emit &&emit) {
  noise.validate();
  std::mt19937_64 engine(run.stream_seed);
  // Ideal (pre-readout) probabilities per basis.
  NoiseModel ideal_readout{noise.depolarizing, 0.0};
  std::array<double, 2> p_plus{plus_probability(run.theta, run.state, run.kind, 0, ideal_readout),
                               plus_probability(run.theta, run.state, run.kind, 1, ideal_readout)};
  for (std::size_t shot = 0; shot < plan.shots_per_run; ++shot) {
    int basis = run.basis;
    if (plan.split == BasisSplit::kRandom) basis = uniform01(engine) < 0.5 ? 0 : 1;
    int bit = uniform01(engine) < p_plus[basis] ? 0 : 1;
    if (uniform01(engine) < noise.readout_flip) bit ^= 1;
    emit(shot, basis, bit);
  }
}

}  // namespace

std::vector<ShotRecord> sample_run(const ExperimentPlan &plan, const RunSpec &run,
                                   const NoiseModel &noise) {
  std::vector<ShotRecord> records;
  records.reserve(plan.shots_per_run);
  run_shots(plan, run, noise, [&](std::size_t shot, int basis, int bit) {
    records.push_back({run.theta, run.state, run.kind, basis, bit,
                       static_cast<std::size_t>(2 * basis + bit), plan.master_seed, run.index,
                       run.stream_seed, shot});
  });
  return records;
}

RunTally tally_run(const ExperimentPlan &plan, const RunSpec &run, const NoiseModel &noise) {
  RunTally tally{run.index, {}};
  run_shots(plan, run, noise,
            [&](std::size_t, int basis, int bit) { ++tally.outcome_counts[2 * basis + bit]; });
  return tally;
}

std::vector<RunTally> simulate(const ExperimentPlan &plan, const NoiseModel &noise,
                               unsigned threads) {
  noise.validate();
  std::vector<RunTally> tallies(plan.runs.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(plan.runs.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < plan.runs.size(); i = next++) {
      tallies[i] = tally_run(plan, plan.runs[i], noise);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return tallies;
}

namespace {

using ScoreTable = std::array<std::array<double, 4>, kNumInputs>;  // [state][outcome]

const ScoreTable &score_table(MeasurementKind kind, int k) {
  static const auto tables = [] {
    std::array<std::array<ScoreTable, 3>, 2> out{};
    for (int kind_i = 0; kind_i < 2; ++kind_i) {
      auto kind = kind_i == 0 ? MeasurementKind::kStandard : MeasurementKind::kAnticipative;
      const auto &priority = priority_table(kind);
      for (int k = 0; k <= 2; ++k) {
        auto sets = subsets_of_size(kNumInputs, static_cast<std::size_t>(k));
        for (std::size_t x = 0; x < kNumInputs; ++x) {
          for (std::size_t z = 0; z < 4; ++z) {
            int allowed = 0;
            int hits = 0;
            for (const auto &s : sets) {
              if (std::find(s.begin(), s.end(), x) != s.end()) continue;
              ++allowed;
              if (priority_guess(priority.answers[z], s) == x) ++hits;
            }
            out[kind_i][k][x][z] = static_cast<double>(hits) / allowed;
          }
        }
      }
    }
    return out;
  }();
  if (k < 0 || k > 2) throw std::invalid_argument("k must be 0, 1 or 2");
  return tables[kind == MeasurementKind::kStandard ? 0 : 1][k];
}

using OutcomeCounts = std::array<std::array<std::size_t, 4>, kNumInputs>;  // [state][outcome]

struct MeanVar {
  double mean = 0.0;
  double var_of_mean = 0.0;
  std::size_t n = 0;
};

// Mean score over the shots of one state restricted to `outcomes`.
MeanVar cell_stats(const std::array<double, 4> &scores, const std::array<std::size_t, 4> &counts,
                   std::initializer_list<std::size_t> outcomes) {
  MeanVar mv;
  double total = 0.0;
  for (auto z : outcomes) {
    mv.n += counts[z];
    total += static_cast<double>(counts[z]) * scores[z];
  }
  if (mv.n == 0) throw std::invalid_argument("no shots recorded for a (state, basis) cell");
  mv.mean = total / static_cast<double>(mv.n);
  if (mv.n > 1) {
    double ss = 0.0;
    for (auto z : outcomes) {
      double d = scores[z] - mv.mean;
      ss += static_cast<double>(counts[z]) * d * d;
    }
    mv.var_of_mean = ss / static_cast<double>(mv.n - 1) / static_cast<double>(mv.n);
  }
  return mv;
}

EmpiricalEstimate estimate(double theta, MeasurementKind kind, int k, const OutcomeCounts &counts,
                           BasisSplit split) {
  const auto &scores = score_table(kind, k);
  EmpiricalEstimate e{theta, kind, k, 0.0, 0.0, 0};
  double var = 0.0;
  for (std::size_t s = 0; s < kNumInputs; ++s) {
    if (split == BasisSplit::kEqual) {
      auto b0 = cell_stats(scores[s], counts[s], {0, 1});
      auto b1 = cell_stats(scores[s], counts[s], {2, 3});
      if (b0.n != b1.n) {
        std::ostringstream msg;
        msg << "unbalanced bases for " << kind_name(kind) << " state " << input_labels()[s]
            << " at theta " << theta << ": " << b0.n << " vs " << b1.n << " shots";
        throw std::invalid_argument(msg.str());
      }
      e.value += (b0.mean + b1.mean) / 8.0;
      var += (b0.var_of_mean + b1.var_of_mean) / 64.0;
      e.shots += b0.n + b1.n;
    } else {
      auto all = cell_stats(scores[s], counts[s], {0, 1, 2, 3});
      e.value += all.mean / 4.0;
      var += all.var_of_mean / 16.0;
      e.shots += all.n;
    }
  }
  e.std_error = std::sqrt(var);
  return e;
}

}  // namespace

double shot_score(MeasurementKind kind, int k, std::size_t state, std::size_t outcome) {
  return score_table(kind, k).at(state).at(outcome);
}

std::vector<EmpiricalEstimate> empirical_success(const ExperimentPlan &plan,
                                                 const std::vector<RunTally> &tallies, int k) {
  // [theta][kind]
  std::vector<std::array<OutcomeCounts, 2>> grouped(plan.thetas.size());
  for (const auto &t : tallies) {
    const auto &run = plan.runs.at(t.run_index);
    auto &counts = grouped[run.theta_index][run.kind == MeasurementKind::kStandard ? 0 : 1];
    for (std::size_t z = 0; z < 4; ++z) counts[run.state][z] += t.outcome_counts[z];
  }
  std::vector<EmpiricalEstimate> out;
  for (std::size_t ti = 0; ti < plan.thetas.size(); ++ti) {
    out.push_back(estimate(plan.thetas[ti], MeasurementKind::kStandard, k, grouped[ti][0],
                           plan.split));
    out.push_back(estimate(plan.thetas[ti], MeasurementKind::kAnticipative, k, grouped[ti][1],
                           plan.split));
  }
  return out;
}

std::vector<EmpiricalEstimate> empirical_success(const std::vector<ShotRecord> &records, int k,
                                                 BasisSplit split) {
  std::map<std::pair<double, int>, OutcomeCounts> grouped;
  for (const auto &r : records) {
    if (r.outcome != static_cast<std::size_t>(2 * r.basis + r.bit)) {
      throw std::invalid_argument("shot record outcome does not match its basis and bit");
    }
    int kind = r.kind == MeasurementKind::kStandard ? 0 : 1;
    ++grouped[{r.theta, kind}].at(r.state).at(r.outcome);
  }
  std::vector<EmpiricalEstimate> out;
  for (const auto &[key, counts] : grouped) {
    auto kind = key.second == 0 ? MeasurementKind::kStandard : MeasurementKind::kAnticipative;
    out.push_back(estimate(key.first, kind, k, counts, split));
  }
  return out;
}

double expected_success(double theta, MeasurementKind kind, int k, const NoiseModel &noise) {
  const auto &scores = score_table(kind, k);
  double value = 0.0;
  for (std::size_t s = 0; s < kNumInputs; ++s) {
    for (int basis = 0; basis < 2; ++basis) {
      double p0 = plus_probability(theta, s, kind, basis, noise);
      value += (p0 * scores[s][2 * basis] + (1.0 - p0) * scores[s][2 * basis + 1]) / 8.0;
    }
  }
  return value;
}

void write_records_csv(std::ostream &out, const std::vector<ShotRecord> &records) {
  out << "theta,state,kind,basis,bit,outcome,master_seed,run_index,stream_seed,shot\n";
  for (const auto &r : records) {
    const auto &labels = outcome_labels(r.kind);
    out << format_number(r.theta) << ',' << input_labels()[r.state] << ',' << kind_name(r.kind)
        << ',' << labels[2 * r.basis].substr(1) << ',' << r.bit << ',' << labels[r.outcome] << ','
        << r.master_seed << ',' << r.run_index << ',' << r.stream_seed << ',' << r.shot << '\n';
  }
}

namespace {

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major

Mat2 mul(const Mat2 &a, const Mat2 &b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Mat2 rz(double t) {
  return {std::polar(1.0, -t / 2), 0.0, 0.0, std::polar(1.0, t / 2)};
}

Mat2 ry(double t) {
  return {std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2)};
}

Mat2 sqrt_x() {
  const Complex p(0.5, 0.5), m(0.5, -0.5);
  return {p, m, m, p};
}

}  // namespace

double decomposition_residual(double theta) {
  const Mat2 lhs = ry(theta);
  Mat2 rhs = mul(mul(mul(sqrt_x(), rz(std::numbers::pi - theta)), sqrt_x()), rz(std::numbers::pi));
  for (auto &v : rhs) v *= Complex(0.0, 1.0);
  // Best phase c with rhs ~ c lhs is tr(lhs^dagger rhs)/|...|.
  Complex overlap = 0.0;
  for (int i = 0; i < 4; ++i) overlap += std::conj(lhs[i]) * rhs[i];
  if (std::abs(overlap) == 0.0) return std::numeric_limits<double>::infinity();
  Complex phase = overlap / std::abs(overlap);
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(rhs[i] - phase * lhs[i]));
  return worst;
}

bool native_decomposition_check(double theta, double tol) {
  return decomposition_residual(theta) <= tol;
}

}  // namespace anticipate
