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

#include <complex>

namespace qeuler {

/// Truncation policy for the infinite sums on the float backend.
///
/// With use_tail_bound = true the evaluator stops as soon as the rigorous
/// geometric tail bound drops to abs_tol and throws ConvergenceError if that
/// does not happen within max_terms terms (per index for the multi sums).
/// With use_tail_bound = false it sums exactly max_terms terms and reports
/// the tail bound it ended with.
struct SeriesControl {
  int max_terms = 400;
  double abs_tol = 1e-12;
  bool use_tail_bound = true;
};

struct SeriesResult {
  std::complex<double> value{0.0, 0.0};
  /// Rigorous bound on the truncation error of `value`.
  double tail_bound = 0.0;
  /// Terms summed (per index for multi sums).
  int terms_used = 0;
};

}  // namespace qeuler
