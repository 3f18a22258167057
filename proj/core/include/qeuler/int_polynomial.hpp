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

/// @file int_polynomial.hpp
/// @brief Dense univariate polynomials over arbitrary-precision integers.
///
/// This is the substrate of the exact scalar backend: rational functions are
/// stored as a rational content times a quotient of primitive integer
/// polynomials, so gcd/normalization happens here, over Z, where the
/// primitive-PRS algorithm keeps coefficient growth in check.

#pragma once

#include <string>
#include <vector>

#include "qeuler/rational.hpp"

namespace qeuler {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending_coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return constant(Integer(1)); }
  static IntPolynomial constant(Integer c);
  /// c * t^k
  static IntPolynomial monomial(Integer c, size_t k);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Integer& leading() const;
  Integer coeff(size_t i) const;
  const std::vector<Integer>& coeffs() const { return c_; }

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial mul_scalar(const Integer& s) const;
  IntPolynomial mul_monomial(const Integer& s, size_t k) const;
  IntPolynomial pow(unsigned long e) const;

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  /// gcd of all coefficients, >= 0; 0 for the zero polynomial.
  Integer content() const;
  /// this / content(); zero stays zero. Sign of the leading coefficient is
  /// preserved.
  IntPolynomial primitive_part() const;

  /// Exact division: requires divisor | this (as integer polynomials).
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  /// Primitive, positive-leading gcd via the primitive pseudo-remainder
  /// sequence. gcd(0, b) = |primitive(b)|.
  static IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

  Rational eval(const Rational& t0) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  static IntPolynomial pseudo_rem(const IntPolynomial& a,
                                  const IntPolynomial& b);

  std::vector<Integer> c_;  // ascending powers, no trailing zeros
};

}  // namespace qeuler
