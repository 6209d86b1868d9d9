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

#include "anticipate/qubit_operators.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace anticipate {

double dot(const Vec3 &u, const Vec3 &v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

double norm(const Vec3 &v) { return std::sqrt(dot(v, v)); }

Vec3 operator+(const Vec3 &u, const Vec3 &v) {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
}

Vec3 operator-(const Vec3 &u, const Vec3 &v) {
  return {u[0] - v[0], u[1] - v[1], u[2] - v[2]};
}

Vec3 operator*(double c, const Vec3 &v) { return {c * v[0], c * v[1], c * v[2]}; }

Vec3 cross(const Vec3 &u, const Vec3 &v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

double HermitianOp::max_eigenvalue() const { return scalar + norm(bloch); }

double HermitianOp::min_eigenvalue() const { return scalar - norm(bloch); }

bool HermitianOp::is_positive(double tol) const {
  return scalar >= norm(bloch) - tol;
}

bool HermitianOp::is_effect(double tol) const {
  double r = norm(bloch);
  return scalar >= r - tol && (1.0 - scalar) >= r - tol;
}

HermitianOp &HermitianOp::operator+=(const HermitianOp &other) {
  scalar += other.scalar;
  bloch = bloch + other.bloch;
  return *this;
}

HermitianOp operator-(const HermitianOp &a, const HermitianOp &b) {
  return {a.scalar - b.scalar, a.bloch - b.bloch};
}

HermitianOp operator*(double c, const HermitianOp &a) {
  return {c * a.scalar, c * a.bloch};
}

double trace_product(const HermitianOp &a, const HermitianOp &b) {
  return 2.0 * (a.scalar * b.scalar + dot(a.bloch, b.bloch));
}

// (a0 + a.s)(b0 + b.s) = a0 b0 + a.b + (a0 b + b0 a).s + i (a x b).s
OperatorProduct multiply(const HermitianOp &a, const HermitianOp &b) {
  OperatorProduct p;
  p.scalar = a.scalar * b.scalar + dot(a.bloch, b.bloch);
  p.real_part = a.scalar * b.bloch + b.scalar * a.bloch;
  p.imag_part = cross(a.bloch, b.bloch);
  return p;
}

double OperatorProduct::max_abs_component() const {
  double m = std::abs(scalar);
  for (int i = 0; i < 3; ++i) {
    m = std::max({m, std::abs(real_part[i]), std::abs(imag_part[i])});
  }
  return m;
}

HermitianOp projector(const Vec3 &direction, double tol) {
  double r = norm(direction);
  if (std::abs(r - 1.0) > tol) {
    std::ostringstream msg;
    msg << "projector direction must be a unit vector, got norm " << r;
    throw std::invalid_argument(msg.str());
  }
  return {0.5, 0.5 * direction};
}

double max_abs_difference(const HermitianOp &a, const HermitianOp &b) {
  double m = std::abs(a.scalar - b.scalar);
  for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(a.bloch[i] - b.bloch[i]));
  return m;
}

namespace {

template <typename Range>
const HermitianOp &find_op(const Range &ops, const Label &label) {
  auto it = std::find_if(ops.begin(), ops.end(),
                         [&](const LabeledOp &e) { return e.label == label; });
  if (it == ops.end()) throw std::out_of_range("unknown label: " + label);
  return it->op;
}

template <typename Range>
std::vector<Label> labels_of(const Range &ops) {
  std::vector<Label> out;
  out.reserve(ops.size());
  for (const auto &e : ops) out.push_back(e.label);
  return out;
}

void require_unique_labels(const std::vector<LabeledOp> &ops) {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (ops[i].label == ops[j].label) {
        throw std::invalid_argument("duplicate label: " + ops[i].label);
      }
    }
  }
}

}  // namespace

Measurement::Measurement(std::vector<LabeledOp> effects) : effects_(std::move(effects)) {
  require_unique_labels(effects_);
}

std::vector<Label> Measurement::labels() const { return labels_of(effects_); }

const HermitianOp &Measurement::effect(const Label &label) const {
  return find_op(effects_, label);
}

HermitianOp Measurement::sum() const {
  HermitianOp total;
  for (const auto &e : effects_) total += e.op;
  return total;
}

StateEnsemble::StateEnsemble(std::vector<LabeledOp> states) : states_(std::move(states)) {
  require_unique_labels(states_);
}

std::vector<Label> StateEnsemble::labels() const { return labels_of(states_); }

const HermitianOp &StateEnsemble::state(const Label &label) const {
  return find_op(states_, label);
}

double StateEnsemble::total_trace() const {
  double t = 0.0;
  for (const auto &s : states_) t += s.op.trace();
  return t;
}

MeasurementReport validate_measurement(const Measurement &m, double tol) {
  MeasurementReport report;
  if (m.empty()) {
    report.valid = false;
    report.messages.push_back("measurement has no outcomes");
    return report;
  }
  for (const auto &e : m.effects()) {
    double r = norm(e.op.bloch);
    EffectViolation v{e.label, e.op.scalar < r - tol, (1.0 - e.op.scalar) < r - tol,
                      e.op.min_eigenvalue(), e.op.max_eigenvalue()};
    if (v.negative || v.exceeds_identity) {
      std::ostringstream msg;
      msg << "effect " << e.label << " has spectrum [" << v.min_eigenvalue << ", "
          << v.max_eigenvalue << "] outside [0, 1]";
      report.messages.push_back(msg.str());
      report.violations.push_back(std::move(v));
    }
  }
  report.completeness_deviation = max_abs_difference(m.sum(), HermitianOp::identity());
  if (report.completeness_deviation > tol) {
    std::ostringstream msg;
    msg << "effects sum to identity only within " << report.completeness_deviation;
    report.messages.push_back(msg.str());
  }
  report.valid = report.violations.empty() && report.completeness_deviation <= tol;
  return report;
}

EnsembleReport validate_ensemble(const StateEnsemble &e, double tol) {
  EnsembleReport report;
  for (const auto &s : e.states()) {
    if (!s.op.is_positive(tol)) {
      report.non_positive.push_back(s.label);
      report.messages.push_back("state " + s.label + " is not positive");
    }
  }
  report.trace_deviation = std::abs(e.total_trace() - 1.0);
  if (report.trace_deviation > tol) {
    std::ostringstream msg;
    msg << "ensemble traces sum to 1 only within " << report.trace_deviation;
    report.messages.push_back(msg.str());
  }
  report.valid = e.size() > 0 && report.non_positive.empty() &&
                 report.trace_deviation <= tol;
  return report;
}

double JointTable::total() const {
  double t = 0.0;
  for (double v : values) t += v;
  return t;
}

double JointTable::row_sum(std::size_t x) const {
  double t = 0.0;
  for (std::size_t z = 0; z < cols(); ++z) t += at(x, z);
  return t;
}

namespace {

std::string join(const std::vector<std::string> &parts) {
  std::string out;
  for (const auto &p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

JointTable joint_table(const StateEnsemble &ensemble, const Measurement &m, double tol) {
  auto ens_report = validate_ensemble(ensemble, tol);
  if (!ens_report.valid) {
    throw std::invalid_argument("invalid state ensemble: " + join(ens_report.messages));
  }
  auto m_report = validate_measurement(m, tol);
  if (!m_report.valid) {
    throw std::invalid_argument("invalid measurement: " + join(m_report.messages));
  }
  JointTable table{ensemble.labels(), m.labels(), {}};
  table.values.resize(table.rows() * table.cols());
  for (std::size_t x = 0; x < table.rows(); ++x) {
    for (std::size_t z = 0; z < table.cols(); ++z) {
      double p = trace_product(ensemble.states()[x].op, m.effects()[z].op);
      if (p < 0.0 && p > -tol) p = 0.0;
      table.at(x, z) = p;
    }
  }
  return table;
}

}  // namespace anticipate
