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

#ifndef ANTICIPATE_ANTICIPATIVE_SOLVER_H_
#define ANTICIPATE_ANTICIPATIVE_SOLVER_H_

// Optimal anticipative measurements for the four-state task via the auxiliary
// ensemble over outcome functions phi: T -> X.
//
// A guessing game with k excluded answers is equivalent to plain minimum-error
// discrimination of the ensemble
//
//   ebar(phi) = 1/(24 C) sum_x |phi^-1(x) & T_x| (1 + x.sigma),
//
// where T_x holds the exclusion sets that avoid x. Any measurement Mbar on X^T
// satisfies sum_phi tr[ebar(phi) Mbar(phi)] <= 2 Lambda, Lambda being the
// largest eigenvalue among the ebar(phi), with equality iff
// ebar(phi) Mbar(phi) = Lambda Mbar(phi) for every phi. The original success
// probability is C times the auxiliary one.
//
// Only k = 1 and k = 2 are handled here. k = 0 and k = 3 are trivial and go
// through the guessing-game functionals directly.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "anticipate/four_state_task.h"
#include "anticipate/guessing_game.h"
#include "anticipate/qubit_operators.h"

namespace anticipate {

/// T for the given k: every k-subset of the four answers, lexicographic.
/// Throws std::invalid_argument unless k is 1 or 2.
const std::vector<ExclusionSet> &exclusion_family(int k);

/// phi: T -> X stored as one input index per element of exclusion_family(k).
struct OutcomeFunction {
  std::vector<std::uint8_t> assignment;

  /// Position in enumeration order: base-4 digits with T[0] most significant.
  std::size_t index() const;
  static OutcomeFunction from_index(std::size_t index, int k);
  std::size_t operator()(std::size_t t) const { return assignment.at(t); }
  /// e.g. "{+a}->+b,{-a}->+a,..."
  std::string to_string(int k) const;

  friend auto operator<=>(const OutcomeFunction &, const OutcomeFunction &) = default;
};

/// All 4^|T| outcome functions in index order (256 for k=1, 4096 for k=2).
std::vector<OutcomeFunction> enumerate_functions(int k);

std::size_t num_outcome_functions(int k);

/// alpha_j = |phi^-1(j a) & T_{j a}|, beta_j = |phi^-1(j b) & T_{j b}|.
struct CountVector {
  int alpha_plus = 0;
  int alpha_minus = 0;
  int beta_plus = 0;
  int beta_minus = 0;

  int total() const { return alpha_plus + alpha_minus + beta_plus + beta_minus; }
  /// Entry for input index x (+a, -a, +b, -b order).
  int operator[](std::size_t x) const;

  friend bool operator==(const CountVector &, const CountVector &) = default;
};

CountVector counts(const OutcomeFunction &phi, int k);

/// Whether c satisfies the integer constraints every count vector obeys for
/// this k: entries in 0..3 with total <= |T|. For k = 2 the counts of any two
/// distinct inputs also sum to at most 5, since the pair {x, y} lies in
/// neither T_x nor T_y.
bool is_feasible(const CountVector &c, int k);

/// gamma = sum + sqrt(da^2 + db^2 + 2 da db ip), da = alpha_+ - alpha_-,
/// db = beta_+ - beta_-. Equals 24 C times the top eigenvalue of ebar(phi).
double gamma(const CountVector &c, double inner_product);

/// Closed-form value of max gamma over the feasible set: 4 + sqrt(10 + 6 ip)
/// for k = 1 and 6 + sqrt(10 + 6 ip) for k = 2.
double gamma_max_closed_form(int k, double inner_product);

class AuxiliaryEnsemble {
 public:
  const TaskParams &params() const { return params_; }
  int k() const { return k_; }
  const std::vector<HermitianOp> &members() const { return members_; }
  const HermitianOp &member(std::size_t phi_index) const { return members_.at(phi_index); }
  const std::vector<CountVector> &count_vectors() const { return counts_; }
  /// C, fixed so that sum_phi tr ebar(phi) = 1.
  double normalization() const { return normalization_; }
  /// Lambda(ebar), the top eigenvalue over all members.
  double lambda() const { return lambda_; }
  /// a.b = cos(theta).
  double inner_product() const { return inner_product_; }
  /// sum_{x,y} f(x,y) tr eps(x).
  double delta() const { return delta_; }
  /// gamma(counts(phi))/(24 C).
  double lambda_of(std::size_t phi_index) const;
  double total_trace() const;

  /// Copy whose members are multiplied by `factor` while C and Lambda keep
  /// their values. Fault injection for the certificate check.
  AuxiliaryEnsemble with_tampered_normalization(double factor) const;

 private:
  friend AuxiliaryEnsemble build_auxiliary(double theta, int k);
  AuxiliaryEnsemble(TaskParams params, int k) : params_(params), k_(k) {}

  TaskParams params_;
  int k_;
  std::vector<HermitianOp> members_;
  std::vector<CountVector> counts_;
  double normalization_ = 0.0;
  double lambda_ = 0.0;
  double inner_product_ = 0.0;
  double delta_ = 0.0;
};

/// Throws std::invalid_argument for theta outside (0, pi/2] or k not in {1, 2}.
AuxiliaryEnsemble build_auxiliary(double theta, int k);

struct LambdaArgmax {
  double lambda = 0.0;
  std::vector<std::size_t> maximizers;  // phi indices, ascending
};

/// Scans every phi. `tol` is the absolute slack on 24 C lambda(phi) for
/// membership in the maximizer set.
LambdaArgmax lambda_argmax(const AuxiliaryEnsemble &aux, double tol = 1e-10);

/// A measurement on X^T, stored sparsely: absent outcomes carry the zero effect.
struct FunctionMeasurement {
  int k = 1;
  std::map<std::size_t, HermitianOp> effects;

  HermitianOp effect(std::size_t phi_index) const;
  HermitianOp sum() const;
  /// The non-zero part as a Measurement labeled by phi strings.
  Measurement support_measurement() const;

  /// w A + (1 - w) B.
  static FunctionMeasurement mix(double w, const FunctionMeasurement &a,
                                 const FunctionMeasurement &b);
};

/// Which base pair (u, v) builds phi^{u,v}_j. The last two are extra optima
/// that only exist when a.b = 0.
enum class PairOrder { kAB, kBA, kNegAB, kBNegA };

/// phi^{u,v}_j: j u unless it is excluded, then j v, and for k = 2 -j v when
/// both are excluded. `sign` is +1 or -1.
OutcomeFunction theorem_function(int k, PairOrder order, int sign);

struct TheoremMeasurement {
  PairOrder order;
  int k;
  std::size_t plus_index;   // phi^{u,v}_+
  std::size_t minus_index;  // phi^{u,v}_-
  Vec3 direction;           // (3u + v)/|3u + v|
  FunctionMeasurement measurement;
};

/// Mbar^{u,v}: the projectors (1 +- direction.sigma)/2 on phi^{u,v}_+-, zero
/// elsewhere.
TheoremMeasurement theorem_measurement(double theta, int k, PairOrder order);

/// Largest component of ebar(phi) Mbar(phi) - Lambda Mbar(phi) over all phi.
double certificate_residual(const AuxiliaryEnsemble &aux, const FunctionMeasurement &m);

/// True iff m is a measurement (within tol) and ebar(phi) Mbar(phi) =
/// Lambda Mbar(phi) holds componentwise within tol for every phi.
bool certify_optimal(const AuxiliaryEnsemble &aux, const FunctionMeasurement &m,
                     double tol = kDefaultTolerance);

/// sum_phi tr[ebar(phi) Mbar(phi)].
double auxiliary_success(const AuxiliaryEnsemble &aux, const FunctionMeasurement &m);

/// Success in the original game of Mbar followed by pi_S(x|phi) = [x == phi(S)],
/// computed through the guessing-game functionals.
double game_success(const TaskParams &params, const FunctionMeasurement &m);

struct AnticipativeReduction {
  Measurement povm;      // outcomes +m, -m, +n, -n
  PostProcessing post;   // rules for every S in T
  std::vector<ExclusionSet> sets;
};

/// Restricts (1/2) Mbar^{a,b} + (1/2) Mbar^{b,a} to its four-element support,
/// relabels phi^{a,b}_j -> j n and phi^{b,a}_j -> j m, and carries pi along.
/// Throws std::invalid_argument unless the inputs are Mbar^{a,b} and Mbar^{b,a}
/// and both pass certify_optimal against `aux`.
AnticipativeReduction reduce_to_povm(const AuxiliaryEnsemble &aux,
                                     const TheoremMeasurement &ab,
                                     const TheoremMeasurement &ba,
                                     double tol = kDefaultTolerance);

/// 2 C Lambda.
double anticipative_success(const AuxiliaryEnsemble &aux);

}  // namespace anticipate

#endif  // ANTICIPATE_ANTICIPATIVE_SOLVER_H_
