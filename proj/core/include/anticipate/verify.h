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

#ifndef ANTICIPATE_VERIFY_H_
#define ANTICIPATE_VERIFY_H_

// Self-check suite behind `anticipate verify`. Each check reports the largest
// deviation it saw and passes iff that deviation is within the tolerance.

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "anticipate/qubit_operators.h"

namespace anticipate {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  std::string detail;
  /// Library operations this check calls.
  std::vector<std::string> operations;
};

struct VerifyOptions {
  double tolerance = kDefaultTolerance;
  /// Multiplies every auxiliary member while keeping C and Lambda. Anything
  /// other than 1 must make the certificate check fail.
  double tamper_normalization = 1.0;
  /// Grid for the per-theta checks; empty means the default 25-point grid.
  std::vector<double> thetas;
};

struct VerifyReport {
  double tolerance = kDefaultTolerance;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::set<std::string> operations_exercised() const;
  const CheckResult *find(const std::string &name) const;
};

/// Every public operation the suite is expected to touch.
const std::vector<std::string> &operation_names();

VerifyReport run_verification(const VerifyOptions &options = {});

/// "PASS name max_dev=... (detail)" lines and a summary.
void print_report(std::ostream &out, const VerifyReport &report);

}  // namespace anticipate

#endif  // ANTICIPATE_VERIFY_H_
