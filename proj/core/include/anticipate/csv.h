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

#ifndef ANTICIPATE_CSV_H_
#define ANTICIPATE_CSV_H_

#include <string>

namespace anticipate {

/// 12 significant digits, '.' separator, independent of the global locale.
std::string format_number(double value);

}  // namespace anticipate

#endif  // ANTICIPATE_CSV_H_
