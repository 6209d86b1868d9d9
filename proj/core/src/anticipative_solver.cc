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

#include "anticipate/anticipative_solver.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anticipate {

namespace {

void require_supported_k(int k) {
  if (k != 1 && k != 2) {
    throw std::invalid_argument("the auxiliary ensemble is defined for k = 1 or k = 2, got k = " +
                                std::to_string(k));
  }
}

std::size_t negate(std::size_t x) { return x ^ 1u; }

bool contains(const ExclusionSet &s, std::size_t x) {
  return std::find(s.begin(), s.end(), x) != s.end();
}

}  // namespace

const std::vector<ExclusionSet> &exclusion_family(int k) {
  require_supported_k(k);
  static const std::vector<ExclusionSet> singles = subsets_of_size(kNumInputs, 1);
  static const std::vector<ExclusionSet> pairs = subsets_of_size(kNumInputs, 2);
  return k == 1 ? singles : pairs;
}

std::size_t num_outcome_functions(int k) {
  return std::size_t{1} << (2 * exclusion_family(k).size());
}

std::size_t OutcomeFunction::index() const {
  std::size_t idx = 0;
  for (auto x : assignment) idx = idx * kNumInputs + x;
  return idx;
}

OutcomeFunction OutcomeFunction::from_index(std::size_t index, int k) {
  const auto &family = exclusion_family(k);
  if (index >= num_outcome_functions(k)) throw std::out_of_range("outcome function index");
  OutcomeFunction phi;
  phi.assignment.resize(family.size());
  for (std::size_t t = family.size(); t-- > 0;) {
    phi.assignment[t] = static_cast<std::uint8_t>(index % kNumInputs);
    index /= kNumInputs;
  }
  return phi;
}

std::string OutcomeFunction::to_string(int k) const {
  const auto &family = exclusion_family(k);
  std::string out;
  for (std::size_t t = 0; t < family.size(); ++t) {
    if (t > 0) out += ',';
    out += '{';
    for (std::size_t i = 0; i < family[t].size(); ++i) {
      if (i > 0) out += ',';
      out += input_labels()[family[t][i]];
    }
    out += "}->";
    out += input_labels()[assignment.at(t)];
  }
  return out;
}

std::vector<OutcomeFunction> enumerate_functions(int k) {
  std::size_t n = num_outcome_functions(k);
  std::vector<OutcomeFunction> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(OutcomeFunction::from_index(i, k));
  return out;
}

int CountVector::operator[](std::size_t x) const {
  switch (x) {
    case kPlusA:
      return alpha_plus;
    case kMinusA:
      return alpha_minus;
    case kPlusB:
      return beta_plus;
    case kMinusB:
      return beta_minus;
  }
  throw std::out_of_range("count vector index");
}

CountVector counts(const OutcomeFunction &phi, int k) {
  const auto &family = exclusion_family(k);
  if (phi.assignment.size() != family.size()) {
    throw std::invalid_argument("outcome function is not defined on all of T");
  }
  std::array<int, kNumInputs> c{};
  for (std::size_t t = 0; t < family.size(); ++t) {
    std::size_t x = phi.assignment[t];
    if (!contains(family[t], x)) ++c[x];
  }
  return {c[kPlusA], c[kMinusA], c[kPlusB], c[kMinusB]};
}

bool is_feasible(const CountVector &c, int k) {
  const int limit = static_cast<int>(exclusion_family(k).size());
  for (std::size_t x = 0; x < kNumInputs; ++x) {
    if (c[x] < 0 || c[x] > 3) return false;
  }
  if (c.total() > limit) return false;
  if (k == 2) {
    for (std::size_t x = 0; x < kNumInputs; ++x) {
      for (std::size_t y = x + 1; y < kNumInputs; ++y) {
        if (c[x] + c[y] > 5) return false;
      }
    }
  }
  return true;
}

double gamma(const CountVector &c, double inner_product) {
  double da = c.alpha_plus - c.alpha_minus;
  double db = c.beta_plus - c.beta_minus;
  double radicand = da * da + db * db + 2.0 * da * db * inner_product;
  return c.total() + std::sqrt(std::max(0.0, radicand));
}

double gamma_max_closed_form(int k, double inner_product) {
  require_supported_k(k);
  return (k == 1 ? 4.0 : 6.0) + std::sqrt(10.0 + 6.0 * inner_product);
}

double AuxiliaryEnsemble::lambda_of(std::size_t phi_index) const {
  return gamma(counts_.at(phi_index), inner_product_) / (24.0 * normalization_);
}

double AuxiliaryEnsemble::total_trace() const {
  double t = 0.0;
  for (const auto &m : members_) t += m.trace();
  return t;
}

AuxiliaryEnsemble AuxiliaryEnsemble::with_tampered_normalization(double factor) const {
  AuxiliaryEnsemble copy = *this;
  for (auto &m : copy.members_) m = factor * m;
  return copy;
}

AuxiliaryEnsemble build_auxiliary(double theta, int k) {
  require_supported_k(k);
  AuxiliaryEnsemble aux(TaskParams(theta), k);
  const auto &p = aux.params_;
  aux.inner_product_ = dot(p.a(), p.b());
  aux.delta_ = make_ensemble(p).total_trace();

  std::size_t n = num_outcome_functions(k);
  aux.counts_.reserve(n);
  long total_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    aux.counts_.push_back(counts(OutcomeFunction::from_index(i, k), k));
    total_count += aux.counts_.back().total();
  }
  // sum_phi tr ebar(phi) = 2 total_count/(24 C) = 1.
  aux.normalization_ = static_cast<double>(total_count) / 12.0;

  double scale = 1.0 / (24.0 * aux.normalization_);
  aux.members_.reserve(n);
  for (const auto &c : aux.counts_) {
    HermitianOp op{scale * c.total(), {0.0, 0.0, 0.0}};
    for (std::size_t x = 0; x < kNumInputs; ++x) {
      op.bloch = op.bloch + (scale * c[x]) * p.input_direction(x);
    }
    aux.members_.push_back(op);
  }
  aux.lambda_ = 0.0;
  for (const auto &m : aux.members_) aux.lambda_ = std::max(aux.lambda_, m.max_eigenvalue());
  return aux;
}

LambdaArgmax lambda_argmax(const AuxiliaryEnsemble &aux, double tol) {
  double scale = 24.0 * aux.normalization();
  std::vector<double> gammas(aux.members().size());
  double best = 0.0;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    gammas[i] = gamma(aux.count_vectors()[i], aux.inner_product());
    best = std::max(best, gammas[i]);
  }
  LambdaArgmax out{best / scale, {}};
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (gammas[i] >= best - tol) out.maximizers.push_back(i);
  }
  return out;
}

HermitianOp FunctionMeasurement::effect(std::size_t phi_index) const {
  auto it = effects.find(phi_index);
  return it == effects.end() ? HermitianOp::zero() : it->second;
}

HermitianOp FunctionMeasurement::sum() const {
  HermitianOp total;
  for (const auto &[i, e] : effects) total += e;
  return total;
}

Measurement FunctionMeasurement::support_measurement() const {
  std::vector<LabeledOp> ops;
  for (const auto &[i, e] : effects) {
    ops.push_back({OutcomeFunction::from_index(i, k).to_string(k), e});
  }
  return Measurement(std::move(ops));
}

FunctionMeasurement FunctionMeasurement::mix(double w, const FunctionMeasurement &a,
                                             const FunctionMeasurement &b) {
  if (a.k != b.k) throw std::invalid_argument("cannot mix measurements with different k");
  FunctionMeasurement out{a.k, {}};
  for (const auto &[i, e] : a.effects) out.effects[i] += w * e;
  for (const auto &[i, e] : b.effects) out.effects[i] += (1.0 - w) * e;
  return out;
}

namespace {

struct BasePair {
  std::size_t u;
  std::size_t v;
};

BasePair base_pair(PairOrder order) {
  switch (order) {
    case PairOrder::kAB:
      return {kPlusA, kPlusB};
    case PairOrder::kBA:
      return {kPlusB, kPlusA};
    case PairOrder::kNegAB:
      return {kMinusA, kPlusB};
    case PairOrder::kBNegA:
      return {kPlusB, kMinusA};
  }
  throw std::invalid_argument("unknown pair order");
}

}  // namespace

OutcomeFunction theorem_function(int k, PairOrder order, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const auto &family = exclusion_family(k);
  auto [u, v] = base_pair(order);
  std::size_t ju = sign > 0 ? u : negate(u);
  std::size_t jv = sign > 0 ? v : negate(v);
  OutcomeFunction phi;
  phi.assignment.resize(family.size());
  for (std::size_t t = 0; t < family.size(); ++t) {
    const auto &s = family[t];
    std::size_t x;
    if (!contains(s, ju)) {
      x = ju;
    } else if (!contains(s, jv)) {
      x = jv;
    } else {
      x = negate(jv);  // only reachable for k = 2
    }
    phi.assignment[t] = static_cast<std::uint8_t>(x);
  }
  return phi;
}

TheoremMeasurement theorem_measurement(double theta, int k, PairOrder order) {
  TaskParams params(theta);
  auto [u, v] = base_pair(order);
  Vec3 raw = 3.0 * params.input_direction(u) + params.input_direction(v);
  Vec3 dir = (1.0 / norm(raw)) * raw;

  TheoremMeasurement tm{order, k, theorem_function(k, order, +1).index(),
                        theorem_function(k, order, -1).index(), dir, {k, {}}};
  tm.measurement.effects[tm.plus_index] = projector(dir);
  tm.measurement.effects[tm.minus_index] = projector(-1.0 * dir);
  return tm;
}

double certificate_residual(const AuxiliaryEnsemble &aux, const FunctionMeasurement &m) {
  double worst = 0.0;
  for (const auto &[i, e] : m.effects) {
    OperatorProduct prod = multiply(aux.member(i), e);
    prod.scalar -= aux.lambda() * e.scalar;
    prod.real_part = prod.real_part - aux.lambda() * e.bloch;
    worst = std::max(worst, prod.max_abs_component());
  }
  return worst;
}

bool certify_optimal(const AuxiliaryEnsemble &aux, const FunctionMeasurement &m, double tol) {
  if (m.k != aux.k() || m.effects.empty()) return false;
  for (const auto &[i, e] : m.effects) {
    if (i >= aux.members().size() || !e.is_effect(tol)) return false;
  }
  if (max_abs_difference(m.sum(), HermitianOp::identity()) > tol) return false;
  return certificate_residual(aux, m) <= tol;
}

double auxiliary_success(const AuxiliaryEnsemble &aux, const FunctionMeasurement &m) {
  double total = 0.0;
  for (const auto &[i, e] : m.effects) total += trace_product(aux.member(i), e);
  return total;
}

double game_success(const TaskParams &params, const FunctionMeasurement &m) {
  const auto &family = exclusion_family(m.k);
  auto game = GameSpec::discrimination(joint_table(make_ensemble(params), m.support_measurement()));
  auto alpha = exclusion_info_map(game, static_cast<std::size_t>(m.k));
  PostProcessing pi(game.num_outcomes(), game.num_answers());
  std::size_t z = 0;
  for (const auto &[i, e] : m.effects) {
    auto phi = OutcomeFunction::from_index(i, m.k);
    for (std::size_t t = 0; t < family.size(); ++t) pi.set_deterministic(family[t], z, phi(t));
    ++z;
  }
  return success_with_cpost(game, alpha, pi);
}

AnticipativeReduction reduce_to_povm(const AuxiliaryEnsemble &aux, const TheoremMeasurement &ab,
                                     const TheoremMeasurement &ba, double tol) {
  if (ab.order != PairOrder::kAB || ba.order != PairOrder::kBA) {
    throw std::invalid_argument("reduction expects Mbar^{a,b} and Mbar^{b,a}");
  }
  if (ab.k != aux.k() || ba.k != aux.k()) {
    throw std::invalid_argument("measurements and auxiliary ensemble disagree on k");
  }
  if (!certify_optimal(aux, ab.measurement, tol) || !certify_optimal(aux, ba.measurement, tol)) {
    throw std::invalid_argument("reduction inputs are not certified optimal");
  }
  const auto &labels = outcome_labels(MeasurementKind::kAnticipative);
  // Outcome order +m, -m, +n, -n.
  const std::array<std::pair<const TheoremMeasurement *, std::size_t>, 4> sources{{
      {&ba, ba.plus_index},
      {&ba, ba.minus_index},
      {&ab, ab.plus_index},
      {&ab, ab.minus_index},
  }};
  std::vector<LabeledOp> effects;
  for (std::size_t z = 0; z < sources.size(); ++z) {
    effects.push_back({labels[z], 0.5 * sources[z].first->measurement.effect(sources[z].second)});
  }
  const auto &family = exclusion_family(aux.k());
  AnticipativeReduction out{Measurement(std::move(effects)),
                            PostProcessing(sources.size(), kNumInputs), family};
  for (std::size_t z = 0; z < sources.size(); ++z) {
    auto phi = OutcomeFunction::from_index(sources[z].second, aux.k());
    for (std::size_t t = 0; t < family.size(); ++t) {
      out.post.set_deterministic(family[t], z, phi(t));
    }
  }
  return out;
}

double anticipative_success(const AuxiliaryEnsemble &aux) {
  return 2.0 * aux.normalization() * aux.lambda();
}

}  // namespace anticipate
