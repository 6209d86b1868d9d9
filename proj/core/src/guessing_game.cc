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

#include "anticipate/guessing_game.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace anticipate {

GameSpec::GameSpec(std::vector<Label> answers, const Predicate &correct, JointTable joint,
                   double tol)
    : answers_(std::move(answers)), joint_(std::move(joint)) {
  if (joint_.values.size() != joint_.rows() * joint_.cols()) {
    throw std::invalid_argument("joint table shape does not match its labels");
  }
  if (answers_.empty() || joint_.rows() == 0 || joint_.cols() == 0) {
    throw std::invalid_argument("game needs at least one input, answer and outcome");
  }
  correct_.assign(joint_.rows() * answers_.size(), 0);
  for (std::size_t x = 0; x < joint_.rows(); ++x) {
    bool any = false;
    for (std::size_t y = 0; y < answers_.size(); ++y) {
      bool c = correct(x, y);
      correct_[x * answers_.size() + y] = c ? 1 : 0;
      any = any || c;
    }
    if (!any) {
      throw std::invalid_argument("input " + joint_.inputs[x] + " has no correct answer");
    }
  }
  for (double p : joint_.values) {
    if (p < -tol) throw std::invalid_argument("joint table has a negative entry");
  }
  if (std::abs(joint_.total() - 1.0) > tol) {
    std::ostringstream msg;
    msg << "joint table sums to " << joint_.total() << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
}

GameSpec GameSpec::discrimination(JointTable joint, double tol) {
  std::vector<Label> answers = joint.inputs;
  return GameSpec(std::move(answers), [](std::size_t x, std::size_t y) { return x == y; },
                  std::move(joint), tol);
}

ExclusionSet GameSpec::correct_answers(std::size_t x) const {
  ExclusionSet g;
  for (std::size_t y = 0; y < answers_.size(); ++y) {
    if (correct(x, y)) g.push_back(y);
  }
  return g;
}

double PartialInfoMap::at(std::size_t x, const ExclusionSet &s) const {
  const auto &row = weights.at(x);
  auto it = row.find(s);
  return it == row.end() ? 0.0 : it->second;
}

std::vector<ExclusionSet> PartialInfoMap::support() const {
  std::set<ExclusionSet> all;
  for (const auto &row : weights) {
    for (const auto &[s, w] : row) {
      if (w > 0.0) all.insert(s);
    }
  }
  return {all.begin(), all.end()};
}

double PostProcessing::at(const ExclusionSet &s, std::size_t z, std::size_t y) const {
  auto it = rules_.find(s);
  if (it == rules_.end()) {
    throw std::invalid_argument("post-processing has no rule for the given exclusion set");
  }
  return it->second[z * num_answers_ + y];
}

std::vector<double> &PostProcessing::rule(const ExclusionSet &s) {
  auto [it, inserted] = rules_.try_emplace(s);
  if (inserted) it->second.assign(num_outcomes_ * num_answers_, 0.0);
  return it->second;
}

void PostProcessing::set(const ExclusionSet &s, std::size_t z, std::size_t y, double p) {
  if (z >= num_outcomes_ || y >= num_answers_) {
    throw std::out_of_range("post-processing index out of range");
  }
  rule(s)[z * num_answers_ + y] = p;
}

void PostProcessing::set_deterministic(const ExclusionSet &s, std::size_t z, std::size_t y) {
  if (z >= num_outcomes_ || y >= num_answers_) {
    throw std::out_of_range("post-processing index out of range");
  }
  auto &r = rule(s);
  std::fill_n(r.begin() + static_cast<std::ptrdiff_t>(z * num_answers_), num_answers_, 0.0);
  r[z * num_answers_ + y] = 1.0;
}

std::size_t PostProcessing::guess(const ExclusionSet &s, std::size_t z) const {
  for (std::size_t y = 0; y < num_answers_; ++y) {
    double p = at(s, z, y);
    if (p == 1.0) return y;
    if (p != 0.0) break;
  }
  throw std::logic_error("post-processing is not deterministic at this (S, z)");
}

bool PostProcessing::is_stochastic(double tol) const {
  for (const auto &[s, r] : rules_) {
    for (std::size_t z = 0; z < num_outcomes_; ++z) {
      double total = 0.0;
      for (std::size_t y = 0; y < num_answers_; ++y) {
        double p = r[z * num_answers_ + y];
        if (p < -tol) return false;
        total += p;
      }
      if (std::abs(total - 1.0) > tol) return false;
    }
  }
  return true;
}

std::vector<ExclusionSet> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<ExclusionSet> out;
  if (k > n) return out;
  ExclusionSet current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    // Advance to the next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

namespace {

bool intersects(const ExclusionSet &a, const ExclusionSet &b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

void check_shapes(const GameSpec &game, const PostProcessing &nu) {
  if (nu.num_outcomes() != game.num_outcomes() || nu.num_answers() != game.num_answers()) {
    throw std::invalid_argument("post-processing shape does not match the game");
  }
}

}  // namespace

PartialInfoMap exclusion_info_map(const GameSpec &game, std::size_t k) {
  std::size_t max_correct = 0;
  for (std::size_t x = 0; x < game.num_inputs(); ++x) {
    max_correct = std::max(max_correct, game.correct_answers(x).size());
  }
  if (k + max_correct > game.num_answers()) {
    std::ostringstream msg;
    msg << "cannot exclude " << k << " wrong answers out of " << game.num_answers();
    throw std::invalid_argument(msg.str());
  }
  auto all = subsets_of_size(game.num_answers(), k);
  PartialInfoMap alpha;
  alpha.weights.resize(game.num_inputs());
  for (std::size_t x = 0; x < game.num_inputs(); ++x) {
    auto g = game.correct_answers(x);
    std::vector<const ExclusionSet *> allowed;
    for (const auto &s : all) {
      if (!intersects(s, g)) allowed.push_back(&s);
    }
    double w = 1.0 / static_cast<double>(allowed.size());
    for (const auto *s : allowed) alpha.weights[x][*s] = w;
  }
  return alpha;
}

bool is_valid_info_map(const GameSpec &game, const PartialInfoMap &alpha, double tol) {
  if (alpha.weights.size() != game.num_inputs()) return false;
  for (std::size_t x = 0; x < game.num_inputs(); ++x) {
    auto g = game.correct_answers(x);
    double total = 0.0;
    for (const auto &[s, w] : alpha.weights[x]) {
      if (w < -tol) return false;
      if (w > tol && intersects(s, g)) return false;
      total += w;
    }
    if (std::abs(total - 1.0) > tol) return false;
  }
  return true;
}

double success_with_cpost(const GameSpec &game, const PartialInfoMap &alpha,
                          const PostProcessing &nu) {
  check_shapes(game, nu);
  if (alpha.weights.size() != game.num_inputs()) {
    throw std::invalid_argument("partial information map does not match the game inputs");
  }
  double total = 0.0;
  for (std::size_t x = 0; x < game.num_inputs(); ++x) {
    for (const auto &[s, w] : alpha.weights[x]) {
      if (w == 0.0) continue;
      auto it = nu.rules().find(s);
      if (it == nu.rules().end()) {
        throw std::invalid_argument("post-processing lacks a rule for an exclusion set");
      }
      const auto &r = it->second;
      for (std::size_t z = 0; z < game.num_outcomes(); ++z) {
        double pxz = game.joint().at(x, z);
        if (pxz == 0.0) continue;
        double hit = 0.0;
        for (std::size_t y = 0; y < game.num_answers(); ++y) {
          if (game.correct(x, y)) hit += r[z * game.num_answers() + y];
        }
        total += hit * w * pxz;
      }
    }
  }
  return total;
}

double success_no_cpost(const GameSpec &game, const PostProcessing &nu0) {
  check_shapes(game, nu0);
  PartialInfoMap trivial;
  trivial.weights.assign(game.num_inputs(), {{ExclusionSet{}, 1.0}});
  return success_with_cpost(game, trivial, nu0);
}

// Scores within this band count as tied; at theta = pi/2 cos^2 and sin^2 of
// pi/4 differ by one ulp.
constexpr double kTieTolerance = 1e-14;

PostProcessing bayes_optimal_post(const GameSpec &game, const PartialInfoMap &alpha) {
  if (alpha.weights.size() != game.num_inputs()) {
    throw std::invalid_argument("partial information map does not match the game inputs");
  }
  PostProcessing nu(game.num_outcomes(), game.num_answers());
  for (const auto &s : alpha.support()) {
    for (std::size_t z = 0; z < game.num_outcomes(); ++z) {
      std::size_t best = 0;
      double best_score = -1.0;
      for (std::size_t y = 0; y < game.num_answers(); ++y) {
        double score = 0.0;
        for (std::size_t x = 0; x < game.num_inputs(); ++x) {
          if (game.correct(x, y)) score += alpha.at(x, s) * game.joint().at(x, z);
        }
        if (score > best_score + kTieTolerance) {
          best_score = score;
          best = y;
        }
      }
      nu.set_deterministic(s, z, best);
    }
  }
  return nu;
}

PostProcessing collapse_post(const PostProcessing &nu,
                             const std::map<ExclusionSet, double> &weights) {
  PostProcessing out(nu.num_outcomes(), nu.num_answers());
  for (std::size_t z = 0; z < nu.num_outcomes(); ++z) {
    for (std::size_t y = 0; y < nu.num_answers(); ++y) {
      double p = 0.0;
      for (const auto &[s, w] : weights) {
        if (w != 0.0) p += w * nu.at(s, z, y);
      }
      out.set({}, z, y, p);
    }
  }
  return out;
}

PostProcessing relabel_post(const GameSpec &game, const std::vector<std::size_t> &relabel) {
  if (relabel.size() != game.num_outcomes()) {
    throw std::invalid_argument("relabeling must cover every outcome");
  }
  PostProcessing nu(game.num_outcomes(), game.num_answers());
  for (std::size_t z = 0; z < relabel.size(); ++z) nu.set_deterministic({}, z, relabel[z]);
  return nu;
}

PostProcessing uniform_post(const GameSpec &game) {
  PostProcessing nu(game.num_outcomes(), game.num_answers());
  double p = 1.0 / static_cast<double>(game.num_answers());
  for (std::size_t z = 0; z < game.num_outcomes(); ++z) {
    for (std::size_t y = 0; y < game.num_answers(); ++y) nu.set({}, z, y, p);
  }
  return nu;
}

std::size_t priority_guess(const std::vector<std::size_t> &priority,
                           const ExclusionSet &excluded) {
  for (std::size_t y : priority) {
    if (!std::binary_search(excluded.begin(), excluded.end(), y)) return y;
  }
  throw std::invalid_argument("every answer in the priority list is excluded");
}

PostProcessing priority_post(const GameSpec &game,
                             const std::vector<std::vector<std::size_t>> &priority,
                             const std::vector<ExclusionSet> &sets) {
  if (priority.size() != game.num_outcomes()) {
    throw std::invalid_argument("priority table must cover every outcome");
  }
  PostProcessing nu(game.num_outcomes(), game.num_answers());
  for (const auto &s : sets) {
    for (std::size_t z = 0; z < priority.size(); ++z) {
      nu.set_deterministic(s, z, priority_guess(priority[z], s));
    }
  }
  return nu;
}

}  // namespace anticipate
