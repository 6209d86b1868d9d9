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

#ifndef ANTICIPATE_GUESSING_GAME_H_
#define ANTICIPATE_GUESSING_GAME_H_

// Success-probability functionals for guessing games where a classical
// computation running in parallel excludes some wrong answers after the
// quantum measurement has been made.
//
// The functionals only see the joint table p(x, z), so they work for any
// dimension; the qubit layer just produces the table.

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "anticipate/qubit_operators.h"

namespace anticipate {

/// A set of answer indices, kept sorted so it can act as a map key.
using ExclusionSet = std::vector<std::size_t>;

/// Inputs X, answers Y, correctness f(x, y) and the joint table p(x, z).
class GameSpec {
 public:
  using Predicate = std::function<bool(std::size_t x, std::size_t y)>;

  /// Throws std::invalid_argument if some input has no correct answer, the
  /// table rows do not match the inputs, or the table is not a distribution.
  GameSpec(std::vector<Label> answers, const Predicate &correct, JointTable joint,
           double tol = kDefaultTolerance);

  /// The common case Y = X with f(x, y) = [x == y].
  static GameSpec discrimination(JointTable joint, double tol = kDefaultTolerance);

  const std::vector<Label> &inputs() const { return joint_.inputs; }
  const std::vector<Label> &answers() const { return answers_; }
  const std::vector<Label> &outcomes() const { return joint_.outcomes; }
  const JointTable &joint() const { return joint_; }
  std::size_t num_inputs() const { return joint_.rows(); }
  std::size_t num_answers() const { return answers_.size(); }
  std::size_t num_outcomes() const { return joint_.cols(); }

  bool correct(std::size_t x, std::size_t y) const {
    return correct_[x * answers_.size() + y] != 0;
  }
  /// G_x as a sorted index list.
  ExclusionSet correct_answers(std::size_t x) const;

 private:
  std::vector<Label> answers_;
  std::vector<char> correct_;
  JointTable joint_;
};

/// alpha(S | x): per input, a distribution over excluded answer sets.
struct PartialInfoMap {
  std::vector<std::map<ExclusionSet, double>> weights;

  double at(std::size_t x, const ExclusionSet &s) const;
  /// Union of all sets carrying weight for some input, in canonical order.
  std::vector<ExclusionSet> support() const;
};

/// nu_S(y | z): for every exclusion set, an outcome-by-answer stochastic matrix.
class PostProcessing {
 public:
  PostProcessing(std::size_t num_outcomes, std::size_t num_answers)
      : num_outcomes_(num_outcomes), num_answers_(num_answers) {}

  std::size_t num_outcomes() const { return num_outcomes_; }
  std::size_t num_answers() const { return num_answers_; }
  const std::map<ExclusionSet, std::vector<double>> &rules() const { return rules_; }
  bool has_rule(const ExclusionSet &s) const { return rules_.contains(s); }

  double at(const ExclusionSet &s, std::size_t z, std::size_t y) const;
  /// Creates the rule for S (all zero) if needed and returns row z.
  void set(const ExclusionSet &s, std::size_t z, std::size_t y, double p);
  /// Puts full mass on answer y for (S, z).
  void set_deterministic(const ExclusionSet &s, std::size_t z, std::size_t y);
  /// Deterministic answer for (S, z); throws std::logic_error if randomized.
  std::size_t guess(const ExclusionSet &s, std::size_t z) const;

  /// Every row of every rule sums to 1 within tol and has no negative entry.
  bool is_stochastic(double tol = kDefaultTolerance) const;

 private:
  std::vector<double> &rule(const ExclusionSet &s);

  std::size_t num_outcomes_;
  std::size_t num_answers_;
  std::map<ExclusionSet, std::vector<double>> rules_;
};

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<ExclusionSet> subsets_of_size(std::size_t n, std::size_t k);

/// Uniform exclusion of k wrong answers: alpha(S|x) = 1/|T_x| for |S| = k with
/// S disjoint from G_x. k = 0 gives alpha(empty|x) = 1. Throws
/// std::invalid_argument if k > |Y| - max_x |G_x|.
PartialInfoMap exclusion_info_map(const GameSpec &game, std::size_t k);

/// Rows sum to one and no set carrying weight contains a correct answer.
bool is_valid_info_map(const GameSpec &game, const PartialInfoMap &alpha,
                       double tol = kDefaultTolerance);

/// sum_{x,y,z,S} f(x,y) nu_S(y|z) alpha(S|x) p(x,z).
/// Throws std::invalid_argument on shape mismatch or when nu lacks a rule for
/// a set that alpha can produce.
double success_with_cpost(const GameSpec &game, const PartialInfoMap &alpha,
                          const PostProcessing &nu);

/// sum_{x,y,z} f(x,y) nu0(y|z) p(x,z), reading nu0 from the rule for S = {}.
double success_no_cpost(const GameSpec &game, const PostProcessing &nu0);

/// For each (S, z) the answer maximizing sum_x f(x,y) alpha(S|x) p(x,z).
/// Ties (scores within 1e-14) go to the lowest answer index.
PostProcessing bayes_optimal_post(const GameSpec &game, const PartialInfoMap &alpha);

/// nu0(y|z) = sum_S nu_S(y|z) w(S), stored under the empty set.
PostProcessing collapse_post(const PostProcessing &nu,
                             const std::map<ExclusionSet, double> &weights);

/// nu0(y|z) = [y == relabel[z]] under the empty set.
PostProcessing relabel_post(const GameSpec &game, const std::vector<std::size_t> &relabel);

/// nu0(y|z) = 1/|Y| under the empty set.
PostProcessing uniform_post(const GameSpec &game);

/// First answer in `priority` that is not in `excluded`. Throws
/// std::invalid_argument if every entry is excluded.
std::size_t priority_guess(const std::vector<std::size_t> &priority,
                           const ExclusionSet &excluded);

/// Deterministic post-processing that walks a per-outcome priority list and
/// skips excluded answers, for every set in `sets`.
PostProcessing priority_post(const GameSpec &game,
                             const std::vector<std::vector<std::size_t>> &priority,
                             const std::vector<ExclusionSet> &sets);

}  // namespace anticipate

#endif  // ANTICIPATE_GUESSING_GAME_H_
