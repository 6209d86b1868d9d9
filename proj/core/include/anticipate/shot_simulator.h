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

#ifndef ANTICIPATE_SHOT_SIMULATOR_H_
#define ANTICIPATE_SHOT_SIMULATOR_H_

// Shot-level Monte Carlo of the four-state demonstration.
//
// Each run is one circuit: prepare a state with R_y, rotate the measurement
// basis with R_y, measure in the computational basis. The four-outcome
// measurements are realized as an even mixture of two projective bases, so a
// (theta, state, kind) triple owns two runs, one per basis.
//
// Seed lineage: run i of a plan draws from std::mt19937_64 seeded with
// derive_stream_seed(master_seed, i), which feeds the words
// {lo32(master_seed), hi32(master_seed), lo32(i), hi32(i)} through
// std::seed_seq and packs the first two generated words into 64 bits.
// Uniforms are (engine() >> 11) * 2^-53. Each shot consumes, in order: a basis
// coin (random split only), the Born draw, and the readout draw. The readout
// draw is taken even when the readout error is zero so that streams stay
// aligned across noise settings.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "anticipate/four_state_task.h"

namespace anticipate {

inline constexpr std::size_t kDefaultShots = 20000;
inline constexpr std::uint64_t kDefaultSeed = 20211109;
/// Readout error of the device qubit used in the demonstration.
inline constexpr double kDefaultReadoutFlip = 0.023;

struct NoiseModel {
  /// Bloch contraction r -> (1 - p) r before measurement, p in [0, 1].
  double depolarizing = 0.0;
  /// Symmetric flip of the measured bit, in [0, 1/2].
  double readout_flip = kDefaultReadoutFlip;

  static NoiseModel noiseless() { return {0.0, 0.0}; }
  /// Throws std::invalid_argument when a parameter is out of range.
  void validate() const;
};

enum class BasisSplit {
  kEqual,   // every run measures its own basis; runs per basis are equal
  kRandom,  // every shot flips a fair coin for its basis
};

/// R_y angles for preparing `state` and for rotating the measurement basis.
/// basis 0 is +-a (standard) or +-m (anticipative); basis 1 is +-b or +-n.
struct AngleSchedule {
  double preparation;
  double measurement;
};
AngleSchedule angle_schedule(double theta, std::size_t state, MeasurementKind kind, int basis);

struct RunSpec {
  std::size_t index;
  std::size_t theta_index;
  double theta;
  std::size_t state;
  MeasurementKind kind;
  int basis;
  std::uint64_t stream_seed;
};

struct ExperimentPlan {
  std::vector<double> thetas;
  std::size_t shots_per_run = kDefaultShots;
  std::uint64_t master_seed = kDefaultSeed;
  BasisSplit split = BasisSplit::kEqual;
  /// Ordered by (theta, state, kind, basis) with basis varying fastest.
  std::vector<RunSpec> runs;
};

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::size_t run_index);

/// |thetas| x 4 states x 2 kinds x 2 bases runs. Throws std::invalid_argument
/// for an empty angle list, an angle outside (0, pi/2] or zero shots.
ExperimentPlan plan_experiment(std::vector<double> thetas, std::size_t shots_per_run,
                               std::uint64_t master_seed,
                               BasisSplit split = BasisSplit::kEqual);

struct ShotRecord {
  double theta;
  std::size_t state;
  MeasurementKind kind;
  int basis;
  int bit;              // measured bit after readout error; 0 means +direction
  std::size_t outcome;  // index into outcome_labels(kind), 2 * basis + bit
  std::uint64_t master_seed;
  std::size_t run_index;
  std::uint64_t stream_seed;
  std::size_t shot;
};

/// Probability that the recorded bit is 0 (the + direction of the basis).
double plus_probability(double theta, std::size_t state, MeasurementKind kind, int basis,
                        const NoiseModel &noise);

std::vector<ShotRecord> sample_run(const ExperimentPlan &plan, const RunSpec &run,
                                   const NoiseModel &noise);

/// Outcome counts of one run, drawn from the same stream as sample_run.
struct RunTally {
  std::size_t run_index;
  std::array<std::size_t, 4> outcome_counts{};
};
RunTally tally_run(const ExperimentPlan &plan, const RunSpec &run, const NoiseModel &noise);

/// Tallies every run, in plan order. The result does not depend on `threads`.
std::vector<RunTally> simulate(const ExperimentPlan &plan, const NoiseModel &noise,
                               unsigned threads = 1);

struct EmpiricalEstimate {
  double theta;
  MeasurementKind kind;
  int k;
  double value;
  double std_error;
  std::size_t shots;
};

/// Score of one shot: the fraction of exclusion sets S in T_x (|S| = k,
/// x not in S) for which the priority guess from outcome z is x.
double shot_score(MeasurementKind kind, int k, std::size_t state, std::size_t outcome);

/// Success estimates per (theta, kind), states weighted uniformly. With the
/// equal split each (state, basis) cell is averaged separately and the two
/// bases get equal weight; throws std::invalid_argument if the two bases of a
/// (theta, state, kind) triple have different shot counts.
std::vector<EmpiricalEstimate> empirical_success(const ExperimentPlan &plan,
                                                 const std::vector<RunTally> &tallies, int k);
std::vector<EmpiricalEstimate> empirical_success(const std::vector<ShotRecord> &records, int k,
                                                 BasisSplit split = BasisSplit::kEqual);

/// The estimator above with exact Born weights in place of counts.
double expected_success(double theta, MeasurementKind kind, int k, const NoiseModel &noise);

/// One CSV line per shot with a header row.
void write_records_csv(std::ostream &out, const std::vector<ShotRecord> &records);

/// Largest deviation between R_y(theta) and i sqrt(X) R_z(pi - theta) sqrt(X)
/// R_z(pi) after removing the best global phase.
double decomposition_residual(double theta);
bool native_decomposition_check(double theta, double tol = kDefaultTolerance);

}  // namespace anticipate

#endif  // ANTICIPATE_SHOT_SIMULATOR_H_
