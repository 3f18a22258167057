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

#include "qeuler/scalar.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

// Shortest decimal that round-trips to the same double.
std::string shortest(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string backend_name(Backend b) {
  return b == Backend::Float ? "float" : "exact";
}

std::complex<double> pow_int(std::complex<double> z, long e) {
  if (e == 0) return {1.0, 0.0};
  bool invert = e < 0;
  unsigned long ue = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
  std::complex<double> acc{1.0, 0.0};
  std::complex<double> base = z;
  while (ue > 0) {
    if (ue & 1ul) acc *= base;
    ue >>= 1;
    if (ue > 0) base *= base;
  }
  return invert ? 1.0 / acc : acc;
}

namespace {

void require_same_backend(const Scalar& a, const Scalar& b,
                          const char* op) {
  if (a.backend() != b.backend()) {
    throw BackendMismatchError(std::string("backend mismatch in ") + op +
                               ": " + backend_name(a.backend()) + " vs " +
                               backend_name(b.backend()));
  }
}

}  // namespace

bool Scalar::is_zero() const {
  if (backend() == Backend::Float) {
    return std::get<std::complex<double>>(v_) == std::complex<double>(0.0, 0.0);
  }
  return std::get<RationalFunction>(v_).is_zero();
}

std::complex<double> Scalar::complex_value() const {
  if (backend() != Backend::Float) {
    throw BackendMismatchError("expected a float-backend scalar");
  }
  return std::get<std::complex<double>>(v_);
}

const RationalFunction& Scalar::exact_value() const {
  if (backend() != Backend::Exact) {
    throw BackendMismatchError("expected an exact-backend scalar");
  }
  return std::get<RationalFunction>(v_);
}

Scalar Scalar::operator-() const {
  if (backend() == Backend::Float) return Scalar(-complex_value());
  return Scalar(-exact_value());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_backend(*this, o, "add");
  if (backend() == Backend::Float) {
    return Scalar(complex_value() + o.complex_value());
  }
  return Scalar(exact_value() + o.exact_value());
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_backend(*this, o, "sub");
  if (backend() == Backend::Float) {
    return Scalar(complex_value() - o.complex_value());
  }
  return Scalar(exact_value() - o.exact_value());
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_backend(*this, o, "mul");
  if (backend() == Backend::Float) {
    return Scalar(complex_value() * o.complex_value());
  }
  return Scalar(exact_value() * o.exact_value());
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_backend(*this, o, "div");
  if (o.is_zero()) throw DomainError("division by zero");
  if (backend() == Backend::Float) {
    return Scalar(complex_value() / o.complex_value());
  }
  return Scalar(exact_value() / o.exact_value());
}

Scalar Scalar::pow(long e) const {
  if (backend() == Backend::Float) return Scalar(pow_int(complex_value(), e));
  return Scalar(exact_value().pow(e));
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_backend(*this, o, "eq");
  if (backend() == Backend::Float) return complex_value() == o.complex_value();
  return exact_value() == o.exact_value();
}

std::string Scalar::to_string() const {
  if (backend() == Backend::Exact) return exact_value().to_string();
  auto z = complex_value();
  std::string out = shortest(z.real());
  if (z.imag() != 0.0) {
    out += (z.imag() < 0 ? " - " : " + ") + shortest(std::abs(z.imag())) + "i";
  }
  return out;
}

bool approx_eq(const Scalar& a, const Scalar& b, double tol) {
  require_same_backend(a, b, "approx_eq");
  if (a.backend() == Backend::Exact) return a == b;
  if (tol < 0) throw DomainError("negative tolerance");
  double diff = std::abs(a.complex_value() - b.complex_value());
  double scale = std::max({1.0, std::abs(a.complex_value()),
                           std::abs(b.complex_value())});
  return diff <= tol * scale;
}

Rational eval_at(const Scalar& a, const Rational& t0) {
  return a.exact_value().eval(t0);
}

// ---------------------------------------------------------------------------
// QBase

QBase QBase::floating(std::complex<double> q) {
  if (std::abs(q) >= 1.0) {
    throw DomainError("float backend requires |q| < 1");
  }
  QBase b;
  b.backend_ = Backend::Float;
  b.qf_ = q;
  return b;
}

QBase QBase::exact_root(const Rational& t0, long root_denom) {
  if (root_denom < 1) throw DomainError("root denominator must be >= 1");
  if (!(t0 > 0 && t0 < 1)) {
    throw DomainError("exact backend requires 0 < q < 1");
  }
  QBase b;
  b.backend_ = Backend::Exact;
  b.t0_ = t0;
  b.has_numeric_ = true;
  b.root_denom_ = root_denom;
  return b;
}

QBase QBase::exact(const Rational& q, long root_denom) {
  if (root_denom < 1) throw DomainError("root denominator must be >= 1");
  if (!(q > 0 && q < 1)) {
    throw DomainError("exact backend requires 0 < q < 1");
  }
  auto root = exact_nth_root(q, static_cast<unsigned long>(root_denom));
  if (!root) {
    throw DomainError("q = " + q.get_str() + " has no exact rational " +
                      std::to_string(root_denom) +
                      "-th root; use formal() or exact_root()");
  }
  return exact_root(*root, root_denom);
}

QBase QBase::formal(long root_denom) {
  if (root_denom < 1) throw DomainError("root denominator must be >= 1");
  QBase b;
  b.backend_ = Backend::Exact;
  b.has_numeric_ = false;
  b.root_denom_ = root_denom;
  return b;
}

QBase QBase::rebased(const Rational& factor) const {
  if (factor == 0) throw DomainError("rebasing power must be nonzero");
  QBase b = *this;
  b.scale_ *= factor;
  b.scale_.canonicalize();
  return b;
}

Scalar QBase::qpow(const Rational& e) const {
  Rational f = scale_ * e;
  f.canonicalize();
  if (backend_ == Backend::Exact) {
    Rational ft = f * root_denom_;
    ft.canonicalize();
    if (!is_integer(ft)) {
      throw UnrepresentableError(
          "exponent not representable: q^(" + f.get_str() + ") with D = " +
          std::to_string(root_denom_));
    }
    return Scalar::exact(RationalFunction::t_power(to_long_exact(ft)));
  }
  // Float backend. Exponent arithmetic stayed rational until here.
  if (qf_ == std::complex<double>(0.0, 0.0)) {
    if (f == 0) return Scalar::floating({1.0, 0.0});
    if (f < 0) throw DomainError("q = 0 raised to a negative power");
    return Scalar::floating({0.0, 0.0});
  }
  if (is_integer(f) && f.get_num().fits_slong_p()) {
    return Scalar::floating(pow_int(qf_, f.get_num().get_si()));
  }
  if (qf_.imag() == 0.0) {
    double re = qf_.real();
    if (re > 0.0) {
      return Scalar::floating({std::pow(re, to_double(f)), 0.0});
    }
    throw BranchCutError(
        "non-integer power of a negative real q lies on the principal "
        "branch cut");
  }
  return Scalar::floating(std::exp(to_double(f) * std::log(qf_)));
}

Scalar QBase::one() const { return from_rational(Rational(1)); }

Scalar QBase::from_rational(const Rational& v) const {
  if (backend_ == Backend::Exact) return Scalar::exact_rational(v);
  return Scalar::floating({to_double(v), 0.0});
}

Scalar QBase::from_integer(const Integer& v) const {
  return from_rational(Rational(v));
}

std::complex<double> QBase::q_complex() const {
  if (backend_ != Backend::Float) {
    throw BackendMismatchError("q_complex() on exact backend");
  }
  return qf_;
}

std::complex<double> QBase::q_eff_complex() const {
  return q_eff().complex_value();
}

const Rational& QBase::t0() const {
  if (backend_ != Backend::Exact || !has_numeric_) {
    throw DomainError("no numeric t0 on this QBase");
  }
  return t0_;
}

Rational QBase::numeric_q() const {
  return rational_pow(t0(), root_denom_);
}

std::string QBase::describe() const {
  std::ostringstream os;
  if (backend_ == Backend::Float) {
    os << shortest(qf_.real());
    if (qf_.imag() != 0.0) {
      os << (qf_.imag() < 0 ? "-" : "+") << shortest(std::abs(qf_.imag()))
         << "i";
    }
  } else if (has_numeric_) {
    os << numeric_q().get_str();
  } else {
    os << "formal";
  }
  if (root_denom_ != 1) os << " (D=" << root_denom_ << ")";
  if (scale_ != 1) os << " scale=" << scale_.get_str();
  return os.str();
}

}  // namespace qeuler
