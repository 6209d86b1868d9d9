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

#ifndef ANTICIPATE_QUBIT_OPERATORS_H_
#define ANTICIPATE_QUBIT_OPERATORS_H_

// Qubit operators in the Bloch parametrization A = s*1 + v.sigma.
//
// Everything here is real arithmetic. Complex 2x2 matrices never appear; the
// trace of a product and the spectrum follow from closed forms in (s, v).

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace anticipate {

inline constexpr double kDefaultTolerance = 1e-12;

using Vec3 = std::array<double, 3>;
using Label = std::string;

double dot(const Vec3 &u, const Vec3 &v);
double norm(const Vec3 &v);
Vec3 operator+(const Vec3 &u, const Vec3 &v);
Vec3 operator-(const Vec3 &u, const Vec3 &v);
Vec3 operator*(double c, const Vec3 &v);
Vec3 cross(const Vec3 &u, const Vec3 &v);

/// A Hermitian qubit operator scalar*1 + bloch.sigma.
struct HermitianOp {
  double scalar = 0.0;
  Vec3 bloch{0.0, 0.0, 0.0};

  static HermitianOp identity() { return {1.0, {0.0, 0.0, 0.0}}; }
  static HermitianOp zero() { return {}; }

  double trace() const { return 2.0 * scalar; }
  double max_eigenvalue() const;
  double min_eigenvalue() const;

  /// scalar >= |bloch| within tol.
  bool is_positive(double tol = kDefaultTolerance) const;
  /// 0 <= A <= 1 within tol.
  bool is_effect(double tol = kDefaultTolerance) const;

  HermitianOp &operator+=(const HermitianOp &other);
  friend HermitianOp operator+(HermitianOp a, const HermitianOp &b) {
    a += b;
    return a;
  }
  friend HermitianOp operator-(const HermitianOp &a, const HermitianOp &b);
  friend HermitianOp operator*(double c, const HermitianOp &a);
  friend bool operator==(const HermitianOp &, const HermitianOp &) = default;
};

/// tr[AB] = 2 (a0 b0 + a.b).
double trace_product(const HermitianOp &a, const HermitianOp &b);

/// The (generally non-Hermitian) product AB = c0*1 + (re + i*im).sigma.
/// Only used for operator identities such as AB = lambda*B.
struct OperatorProduct {
  double scalar = 0.0;
  Vec3 real_part{0.0, 0.0, 0.0};
  Vec3 imag_part{0.0, 0.0, 0.0};

  double max_abs_component() const;
};
OperatorProduct multiply(const HermitianOp &a, const HermitianOp &b);

/// Rank-1 projector (1 + u.sigma)/2. Throws std::invalid_argument when |u| is
/// not 1 within tol.
HermitianOp projector(const Vec3 &direction, double tol = 1e-9);

/// Largest componentwise deviation between two operators.
double max_abs_difference(const HermitianOp &a, const HermitianOp &b);

/// A labeled operator. Used for both POVM effects and ensemble members.
struct LabeledOp {
  Label label;
  HermitianOp op;
};

/// A finite POVM with outcome labels kept in insertion order.
class Measurement {
 public:
  Measurement() = default;
  explicit Measurement(std::vector<LabeledOp> effects);

  const std::vector<LabeledOp> &effects() const { return effects_; }
  std::size_t size() const { return effects_.size(); }
  bool empty() const { return effects_.empty(); }
  std::vector<Label> labels() const;
  /// Throws std::out_of_range for an unknown label.
  const HermitianOp &effect(const Label &label) const;
  HermitianOp sum() const;

 private:
  std::vector<LabeledOp> effects_;
};

/// A labeled family of subnormalized qubit states, in insertion order.
class StateEnsemble {
 public:
  StateEnsemble() = default;
  explicit StateEnsemble(std::vector<LabeledOp> states);

  const std::vector<LabeledOp> &states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  std::vector<Label> labels() const;
  const HermitianOp &state(const Label &label) const;
  double total_trace() const;

 private:
  std::vector<LabeledOp> states_;
};

struct EffectViolation {
  Label label;
  bool negative = false;        // scalar < |bloch|
  bool exceeds_identity = false;  // 1 - scalar < |bloch|
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

struct MeasurementReport {
  bool valid = true;
  std::vector<EffectViolation> violations;
  /// max |component| of (sum of effects - identity).
  double completeness_deviation = 0.0;
  std::vector<std::string> messages;
};

MeasurementReport validate_measurement(const Measurement &m,
                                       double tol = kDefaultTolerance);

struct EnsembleReport {
  bool valid = true;
  std::vector<Label> non_positive;
  double trace_deviation = 0.0;  // |sum_x tr eps(x) - 1|
  std::vector<std::string> messages;
};

EnsembleReport validate_ensemble(const StateEnsemble &e,
                                 double tol = kDefaultTolerance);

/// Row-major table p(x, z) with input rows and outcome columns.
struct JointTable {
  std::vector<Label> inputs;
  std::vector<Label> outcomes;
  std::vector<double> values;

  std::size_t rows() const { return inputs.size(); }
  std::size_t cols() const { return outcomes.size(); }
  double at(std::size_t x, std::size_t z) const { return values[x * cols() + z]; }
  double &at(std::size_t x, std::size_t z) { return values[x * cols() + z]; }
  double total() const;
  double row_sum(std::size_t x) const;
};

/// Born rule p(x, z) = tr[eps(x) M(z)]. Throws std::invalid_argument when either
/// input fails validation. Entries in (-tol, 0) are clamped to zero.
JointTable joint_table(const StateEnsemble &ensemble, const Measurement &m,
                       double tol = kDefaultTolerance);

}  // namespace anticipate

#endif  // ANTICIPATE_QUBIT_OPERATORS_H_
