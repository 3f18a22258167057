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

/// @file rational_function.hpp
/// @brief Canonical-form rational functions in one variable over Q.
///
/// Canonical form: value = content * num(t) / den(t) where
///   - content is an exact rational carrying the sign (0 iff the value is 0),
///   - num and den are primitive integer polynomials with positive leading
///     coefficients,
///   - gcd(num, den) = 1.
/// The representation is unique, so equality is plain component equality.
/// Negative powers of t are expressed with t-powers in the denominator.

#pragma once

#include <string>

#include "qeuler/int_polynomial.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

class RationalFunction {
 public:
  /// Zero.
  RationalFunction();

  static RationalFunction from_rational(const Rational& v);
  static RationalFunction from_integer(long v);
  /// t^k; k may be negative (goes to the denominator).
  static RationalFunction t_power(long k);
  /// num/den, canonicalized. den must be nonzero.
  static RationalFunction fraction(const IntPolynomial& num,
                                   const IntPolynomial& den);
  static RationalFunction from_poly(const IntPolynomial& p);

  bool is_zero() const { return content_ == 0; }
  bool is_rational() const;
  /// The exact rational value if den == num == 1 (throws otherwise).
  Rational as_rational() const;

  const Rational& content() const { return content_; }
  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  /// Value at t = t0; throws DomainError on a pole.
  Rational eval(const Rational& t0) const;

  /// Canonical text form "(content)*(num)/(den)"; "/(den)" omitted when
  /// den = 1, "(0)" for zero.
  std::string to_string(const std::string& var = "t") const;

 private:
  RationalFunction(Rational content, IntPolynomial num, IntPolynomial den);
  /// Restores all invariants from arbitrary raw parts (den != 0).
  static RationalFunction normalized(Rational content, IntPolynomial num,
                                     IntPolynomial den);

  Rational content_;
  IntPolynomial num_;
  IntPolynomial den_;
};

}  // namespace qeuler
