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

/// @file q_euler.hpp
/// @brief Higher-order q-Euler polynomials E_{n,q}^{(r)}(x) by three
/// independent routes, plus the addition and reflection identities.
///
/// Routes:
///   - multisum: the defining r-fold alternating series
///       E = [2]_q^r sum_{m_1..m_r >= 0} (-q)^{m_1+..+m_r} [m_1+..+m_r+x]_q^n
///     (float backend; brute-force oracle),
///   - single_sum: the same series collapsed over the total m with
///     binom(m+r-1, m) tuples per total (float backend),
///   - closed_form: the finite sum
///       E = [2]_q^r (1-q)^{-n} sum_{k=0}^{n} binom(n,k) (-1)^k q^{kx}
///           (1+q^{k+1})^{-r}
///     (both backends; the production evaluator).
/// The three must agree; the series forms are the oracles for the closed one.

#pragma once

#include <vector>

#include "qeuler/report.hpp"
#include "qeuler/scalar.hpp"
#include "qeuler/series.hpp"

namespace qeuler {

struct QEulerQuery {
  int n = 0;       // coefficient index, n >= 0
  int r = 1;       // order, r >= 1
  Rational x{0};   // argument
  QBase base = QBase::floating({0.5, 0.0});
  SeriesControl ctrl;
};

/// Brute-force r-fold sum (float backend only).
SeriesResult q_euler_multisum(const QEulerQuery& query);

/// Collapsed single series (float backend only).
SeriesResult q_euler_single_sum(const QEulerQuery& query);

/// Finite closed form; exact on the exact backend. ctrl is unused.
Scalar q_euler_closed(const QEulerQuery& query);

/// c_k with E_{n,q}^{(r)}(x) = sum_k c_k q^{kx}; the grid-evaluation path
/// (coefficients are independent of x).
std::vector<Scalar> q_euler_closed_coefficients(int n, int r,
                                                const QBase& base);

/// The closed form assembled over one common denominator:
///   E_{n,q}^{(r)}(x) = prefactor * sum_k weighted_cofactors[k] * q^{kx}
///                      / denominator.
/// On the exact backend the weighted cofactors are polynomials, so grid
/// sums can be accumulated without intermediate fraction reductions.
struct ClosedFormParts {
  std::vector<Scalar> weighted_cofactors;  // binom(n,k)(-1)^k prod_{j!=k}(..)
  Scalar denominator;                      // (1-q)^n prod_k (1+q^{k+1})^r
  Scalar prefactor;                        // [2]_q^r
};
ClosedFormParts q_euler_closed_parts(int n, int r, const QBase& base);

/// Addition theorem: E_{n,q}^{(r)}(x+y) =
/// sum_i binom(n,i) q^{xi} E_{i,q}^{(r)}(y) [x]_q^{n-i}.
IdentityReport addition_report(int n, int r, const Rational& x,
                               const Rational& y, const QBase& base,
                               double tol = 1e-12);

/// The two-index reflection identities relating shifts in the first index at
/// argument y to shifts in the second at argument x + y.
enum class ReflectionVariant {
  /// sum_k binom(m,k) q^{(k+n)x} E_{k+n}(y) [x]^{m-k}
  ///   = sum_k binom(n,k) E_{m+k}(x+y) q^{(n-k)x} [-x]^{n-k}
  Weighted,
  /// same with the q-power redistributed: q^{kx} left, q^{-kx} right
  Plain,
};

IdentityReport reflection_report(int m, int n, int r, const Rational& x,
                                 const Rational& y, const QBase& base,
                                 ReflectionVariant variant,
                                 double tol = 1e-12);

}  // namespace qeuler
