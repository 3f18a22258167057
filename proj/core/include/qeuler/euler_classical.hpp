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

/// @file euler_classical.hpp
/// @brief Classical Euler numbers and polynomials of order r, with exact
/// rational coefficients.
///
/// Kept deliberately independent of the rational-function machinery: this
/// module is the q -> 1 oracle, so it must not share an implementation path
/// with what it checks.

#pragma once

#include <string>
#include <vector>

#include "qeuler/rational.hpp"

namespace qeuler {

/// Dense polynomial with exact rational coefficients (ascending powers,
/// trailing zeros trimmed).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending_coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(size_t i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  Rational eval(const Rational& x) const;

  bool operator==(const RationalPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const RationalPolynomial& o) const { return !(*this == o); }

  /// Human form in descending powers, e.g. "x^2 - x + 1/4".
  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Rational> c_;
};

/// E_0 .. E_{n_max} from E_0 = 1 and
/// sum_{k=0}^{n} binom(n,k) E_k + E_n = 0 for n >= 1.
std::vector<Rational> euler_numbers_order1(int n_max);

/// Order-r Euler numbers as the r-fold binomial convolution of the order-1
/// sequence.
std::vector<Rational> euler_numbers(int n_max, int r);

/// E_n^{(r)}(x) = sum_k binom(n,k) E_k^{(r)} x^{n-k}; degree n, monic.
RationalPolynomial euler_polynomial(int n, int r);

}  // namespace qeuler
