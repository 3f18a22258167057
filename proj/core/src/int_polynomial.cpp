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

#include "qeuler/int_polynomial.hpp"

#include <cassert>
#include <sstream>

#include "qeuler/errors.hpp"

namespace qeuler {

IntPolynomial::IntPolynomial(std::vector<Integer> ascending_coeffs)
    : c_(std::move(ascending_coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::constant(Integer c) {
  IntPolynomial p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::monomial(Integer c, size_t k) {
  IntPolynomial p;
  if (c != 0) {
    p.c_.assign(k + 1, Integer(0));
    p.c_[k] = std::move(c);
  }
  return p;
}

bool IntPolynomial::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const Integer& IntPolynomial::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

Integer IntPolynomial::coeff(size_t i) const {
  return i < c_.size() ? c_[i] : Integer(0);
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial out;
  out.c_.resize(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out.c_[i] += o.c_[i];
  out.trim();
  return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial out;
  out.c_.resize(std::max(c_.size(), o.c_.size()), Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out.c_[i] -= o.c_[i];
  out.trim();
  return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  IntPolynomial out;
  out.c_.assign(c_.size() + o.c_.size() - 1, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      out.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  out.trim();
  return out;
}

IntPolynomial IntPolynomial::mul_scalar(const Integer& s) const {
  if (s == 0) return IntPolynomial();
  IntPolynomial out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

IntPolynomial IntPolynomial::mul_monomial(const Integer& s, size_t k) const {
  if (s == 0 || is_zero()) return IntPolynomial();
  IntPolynomial out;
  out.c_.assign(c_.size() + k, Integer(0));
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i + k] = c_[i] * s;
  out.trim();
  return out;
}

IntPolynomial IntPolynomial::pow(unsigned long e) const {
  IntPolynomial acc = one();
  IntPolynomial base = *this;
  while (e > 0) {
    if (e & 1ul) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

Integer IntPolynomial::content() const {
  Integer g(0);
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return IntPolynomial();
  Integer g = content();
  if (g == 1) return *this;
  IntPolynomial out = *this;
  for (auto& c : out.c_) {
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero()) return IntPolynomial();
  if (divisor.is_one()) return *this;
  int dq = degree() - divisor.degree();
  if (dq < 0) throw DomainError("inexact polynomial division");
  std::vector<Integer> rem = c_;
  std::vector<Integer> quot(static_cast<size_t>(dq) + 1, Integer(0));
  const Integer& lead = divisor.leading();
  for (int k = dq; k >= 0; --k) {
    Integer& top = rem[static_cast<size_t>(k + divisor.degree())];
    if (top == 0) continue;
    Integer q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    quot[static_cast<size_t>(k)] = q;
    for (int j = 0; j <= divisor.degree(); ++j) {
      rem[static_cast<size_t>(k + j)] -= q * divisor.c_[static_cast<size_t>(j)];
    }
  }
  for (const auto& c : rem) {
    if (c != 0) throw DomainError("inexact polynomial division");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::pseudo_rem(const IntPolynomial& a,
                                         const IntPolynomial& b) {
  assert(!b.is_zero());
  IntPolynomial r = a;
  const Integer& lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Integer lr = r.leading();
    size_t shift = static_cast<size_t>(r.degree() - b.degree());
    if (lb == 1) {
      r = r - b.mul_monomial(lr, shift);
    } else if (lb == -1) {
      r = r + b.mul_monomial(lr, shift);
    } else {
      r = r.mul_scalar(lb) - b.mul_monomial(lr, shift);
    }
  }
  return r;
}

IntPolynomial IntPolynomial::gcd(const IntPolynomial& a,
                                 const IntPolynomial& b) {
  auto positive_leading = [](IntPolynomial p) {
    if (!p.is_zero() && p.leading() < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return positive_leading(b.primitive_part());
  if (b.is_zero()) return positive_leading(a.primitive_part());
  IntPolynomial u = a.primitive_part();
  IntPolynomial v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_rem(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  return positive_leading(std::move(u));
}

Rational IntPolynomial::eval(const Rational& t0) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * t0 + Rational(c_[i]);
  }
  return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Integer mag = abs(c_[i]);
    if (first) {
      if (c_[i] < 0) os << "-";
      first = false;
    } else {
      os << (c_[i] < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace qeuler
