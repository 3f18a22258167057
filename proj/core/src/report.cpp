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

#include "qeuler/report.hpp"

#include <cmath>
#include <limits>

namespace qeuler {

IdentityReport make_identity_report(
    Scalar lhs, Scalar rhs, double tolerance,
    std::vector<std::pair<std::string, std::string>> params) {
  IdentityReport rep;
  rep.pass = approx_eq(lhs, rhs, tolerance);  // also checks backend match
  rep.exact_backend = lhs.backend() == Backend::Exact;
  if (rep.exact_backend) {
    rep.exact_equal = rep.pass;
    rep.abs_diff =
        rep.pass ? 0.0 : std::numeric_limits<double>::quiet_NaN();
  } else {
    rep.abs_diff = std::abs(lhs.complex_value() - rhs.complex_value());
  }
  rep.tolerance = tolerance;
  rep.lhs = std::move(lhs);
  rep.rhs = std::move(rhs);
  rep.params = std::move(params);
  return rep;
}

}  // namespace qeuler
