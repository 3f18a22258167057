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

/// @file scalar.hpp
/// @brief The two scalar backends behind one field interface.
///
/// A Scalar is either a complex double (float backend) or a canonical
/// rational function in t (exact backend, with t = q^{1/D}). All values are
/// immutable after construction and every operation is a pure function, so
/// scalars can be shared freely across threads.

#pragma once

#include <complex>
#include <string>
#include <variant>

#include "qeuler/rational.hpp"
#include "qeuler/rational_function.hpp"

namespace qeuler {

enum class Backend { Float, Exact };

std::string backend_name(Backend b);

/// Integer power by repeated squaring; pow_int(z, 0) == 1 for every z
/// (the 0^0 = 1 convention used throughout).
std::complex<double> pow_int(std::complex<double> z, long e);

class Scalar {
 public:
  /// Float-backend zero. Prefer the factories when backend matters.
  Scalar() : v_(std::complex<double>(0.0, 0.0)) {}

  static Scalar floating(std::complex<double> v) { return Scalar(v); }
  static Scalar exact(RationalFunction v) { return Scalar(std::move(v)); }
  static Scalar exact_rational(const Rational& v) {
    return Scalar(RationalFunction::from_rational(v));
  }

  Backend backend() const {
    return std::holds_alternative<std::complex<double>>(v_) ? Backend::Float
                                                            : Backend::Exact;
  }
  bool is_exact() const { return backend() == Backend::Exact; }
  bool is_zero() const;

  /// Accessors; throw BackendMismatchError on the wrong backend.
  std::complex<double> complex_value() const;
  const RationalFunction& exact_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar pow(long e) const;

  /// Exact equality. Decidable on the exact backend (canonical forms);
  /// bitwise complex equality on the float backend.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  explicit Scalar(std::complex<double> v) : v_(v) {}
  explicit Scalar(RationalFunction v) : v_(std::move(v)) {}

  std::variant<std::complex<double>, RationalFunction> v_;
};

/// Exact backend: true iff a = b exactly (tol ignored).
/// Float backend: |a - b| <= tol * max(1, |a|, |b|).
bool approx_eq(const Scalar& a, const Scalar& b, double tol);

/// Value of an exact scalar at t = t0; throws DomainError on a pole.
Rational eval_at(const Scalar& a, const Rational& t0);

/// The deformation parameter q. Carries the backend, the underlying value of
/// q, the root denominator D (so fractional powers q^{p/D} are exact t^p on
/// the exact backend), and a rational rebasing scale: rebased(a) represents
/// the effective base q^a while keeping every exponent computation in terms
/// of the original q, exactly.
class QBase {
 public:
  /// Float backend; requires |q| < 1 strictly.
  static QBase floating(std::complex<double> q);
  /// Exact backend with a numeric q in (0,1); q must be an exact D-th power
  /// of a rational so that t = q^{1/D} is representable.
  static QBase exact(const Rational& q, long root_denom = 1);
  /// Exact backend specified by t0 = q^{1/D} directly, 0 < t0 < 1.
  static QBase exact_root(const Rational& t0, long root_denom);
  /// Exact backend with no numeric value: q = t^D stays formal.
  static QBase formal(long root_denom = 1);

  Backend backend() const { return backend_; }
  /// Effective base q^(scale * factor).
  QBase rebased(const Rational& factor) const;
  const Rational& scale() const { return scale_; }
  long root_denom() const { return root_denom_; }

  /// (q^scale)^e. Exponent arithmetic is exact: the float backend evaluates
  /// q^(scale*e) with the rational exponent simplified first, the exact
  /// backend returns t^(scale*e*D) and demands that it is an integer power.
  Scalar qpow(const Rational& e) const;
  Scalar q_eff() const { return qpow(Rational(1)); }

  /// Constants living on this backend.
  Scalar one() const;
  Scalar from_rational(const Rational& v) const;
  Scalar from_integer(const Integer& v) const;

  /// Float backend helpers (throw on exact backend).
  std::complex<double> q_complex() const;
  std::complex<double> q_eff_complex() const;

  /// Exact backend helpers.
  bool has_numeric() const { return has_numeric_; }
  const Rational& t0() const;
  /// The numeric q = t0^D (exact backend with a numeric value).
  Rational numeric_q() const;

  /// Short description of q for report metadata, e.g. "0.5", "1/2 (D=2)".
  std::string describe() const;

 private:
  QBase() = default;

  Backend backend_ = Backend::Float;
  std::complex<double> qf_{0.0, 0.0};
  Rational t0_{0};
  bool has_numeric_ = false;
  Rational scale_{1};
  long root_denom_ = 1;
};

}  // namespace qeuler
