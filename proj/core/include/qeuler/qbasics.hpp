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

/// @file qbasics.hpp
/// @brief q-numbers, Gaussian binomial coefficients and q-Pochhammer
/// products: the building blocks everything else is assembled from.

#pragma once

#include "qeuler/scalar.hpp"

namespace qeuler {

/// [x]_q = (1 - q^x) / (1 - q), at the effective base of `q`.
Scalar q_number(const Rational& x, const QBase& q);

/// [x]_{q^a} for a positive integer a. Satisfies [a]_q [x]_{q^a} = [ax]_q.
Scalar q_number_base(const Rational& x, const QBase& q, long a);

/// Gaussian binomial coefficient C_q(n, k) = prod_{i=1..k}
/// (1 - q^{n-k+i}) / (1 - q^i); 0 when k < 0 or k > n. A polynomial in q.
Scalar gauss_binomial_nk(long n, long k, const QBase& q);

/// C_q(m + r - 1, m), the coefficient collapsing r-fold geometric-type sums.
Scalar gauss_binomial(long m, long r, const QBase& q);

/// (z; q)_r = prod_{j=0..r-1} (1 - z q^j); empty product = 1.
Scalar q_pochhammer(const Scalar& z, const QBase& q, long r);

}  // namespace qeuler
