// Copyright 2026 The qeuler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qeuler/scalar.hpp"

namespace qeuler {

/// Both sides of a verified identity plus the verdict.
///
/// pass <=> approx_eq(lhs, rhs, tolerance): exact equality of canonical
/// rational functions on the exact backend (tolerance ignored there),
/// relative comparison on the float backend.
struct IdentityReport {
  Scalar lhs;
  Scalar rhs;
  bool exact_backend = false;
  /// Exact backend only: canonical forms identical.
  bool exact_equal = false;
  /// Float backend: |lhs - rhs|. Exact backend: 0 when equal, NaN otherwise.
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Echo of every parameter that produced this report, in a fixed order.
  std::vector<std::pair<std::string, std::string>> params;
};

IdentityReport make_identity_report(
    Scalar lhs, Scalar rhs, double tolerance,
    std::vector<std::pair<std::string, std::string>> params);

}  // namespace qeuler
