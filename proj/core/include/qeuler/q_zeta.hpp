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

/// @file q_zeta.hpp
/// @brief The multiple q-Euler zeta function
///   zeta_{q,r}(s, x) = [2]_q^r sum_{m_1..m_r} (-q)^{m_1+..+m_r}
///                      / [m_1+..+m_r+x]_q^s
/// for complex s, real x not in {0, -1, -2, ...}. For |q| < 1 the series
/// converges geometrically for every complex s, so no analytic continuation
/// is involved anywhere; the value at s = -n equals E_{n,q}^{(r)}(x), which
/// interpolation_report checks through two independent code paths.

#pragma once

#include <complex>

#include "qeuler/report.hpp"
#include "qeuler/scalar.hpp"
#include "qeuler/series.hpp"

namespace qeuler {

struct ZetaQuery {
  std::complex<double> s{0.0, 0.0};
  Rational x{1};  // real argument, not a non-positive integer
  int r = 1;      // r >= 0; r = 0 degenerates to [x]_q^{-s}
  QBase base = QBase::floating({0.5, 0.0});
  SeriesControl ctrl;
};

/// Brute-force r-fold sum (float backend only; oracle).
SeriesResult zeta_multisum(const ZetaQuery& query);

/// Collapsed single series; the production zeta evaluator.
SeriesResult zeta_single_sum(const ZetaQuery& query);

/// zeta_{q,r}(-n, x) against E_{n,q}^{(r)}(x): zeta via the single series,
/// the q-Euler value via the finite closed form.
IdentityReport interpolation_report(int n, int r, const Rational& x,
                                    const QBase& base,
                                    const SeriesControl& ctrl,
                                    double tol = 1e-10);

}  // namespace qeuler
