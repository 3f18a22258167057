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

#include "qeuler/rational_function.hpp"

#include <sstream>
#include <utility>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

const IntPolynomial& poly_one() {
  static const IntPolynomial one = IntPolynomial::one();
  return one;
}

}  // namespace

RationalFunction::RationalFunction()
    : content_(0), num_(poly_one()), den_(poly_one()) {}

RationalFunction::RationalFunction(Rational content, IntPolynomial num,
                                   IntPolynomial den)
    : content_(std::move(content)), num_(std::move(num)), den_(std::move(den)) {}

RationalFunction RationalFunction::from_rational(const Rational& v) {
  if (v == 0) return RationalFunction();
  return RationalFunction(v, poly_one(), poly_one());
}

RationalFunction RationalFunction::from_integer(long v) {
  return from_rational(Rational(v));
}

RationalFunction RationalFunction::t_power(long k) {
  if (k >= 0) {
    return RationalFunction(Rational(1),
                            IntPolynomial::monomial(Integer(1),
                                                    static_cast<size_t>(k)),
                            poly_one());
  }
  return RationalFunction(
      Rational(1), poly_one(),
      IntPolynomial::monomial(Integer(1), static_cast<size_t>(-k)));
}

RationalFunction RationalFunction::from_poly(const IntPolynomial& p) {
  return normalized(Rational(1), p, poly_one());
}

RationalFunction RationalFunction::fraction(const IntPolynomial& num,
                                            const IntPolynomial& den) {
  if (den.is_zero()) throw DomainError("zero denominator");
  return normalized(Rational(1), num, den);
}

RationalFunction RationalFunction::normalized(Rational content,
                                              IntPolynomial num,
                                              IntPolynomial den) {
  if (content == 0 || num.is_zero()) return RationalFunction();
  Integer cn = num.content();
  Integer cd = den.content();
  if (cn != 1) num = num.primitive_part();
  if (cd != 1) den = den.primitive_part();
  content *= Rational(cn, cd);
  content.canonicalize();
  if (num.leading() < 0) {
    num = -num;
    content = -content;
  }
  if (den.leading() < 0) {
    den = -den;
    content = -content;
  }
  IntPolynomial g = IntPolynomial::gcd(num, den);
  if (!g.is_one()) {
    num = num.divide_exact(g);
    den = den.divide_exact(g);
  }
  return RationalFunction(std::move(content), std::move(num), std::move(den));
}

bool RationalFunction::is_rational() const {
  return num_.is_one() && den_.is_one();
}

Rational RationalFunction::as_rational() const {
  if (!is_rational()) {
    throw DomainError("not a constant rational function: " + to_string());
  }
  return content_;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.content_ = -out.content_;
  return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // a = ca*na/da, b = cb*nb/db with g = gcd(da, db):
  //   a + b = c * (alpha*na*(db/g) + beta*nb*(da/g)) / (g*(da/g)*(db/g))
  // where c = rational_gcd(ca, cb) and alpha, beta are integers. Since
  // gcd(na, da) = gcd(nb, db) = 1 and da/g, db/g are coprime, the only
  // polynomial reduction left is against g.
  IntPolynomial g = IntPolynomial::gcd(den_, o.den_);
  IntPolynomial da_r = g.is_one() ? den_ : den_.divide_exact(g);
  IntPolynomial db_r = g.is_one() ? o.den_ : o.den_.divide_exact(g);
  Rational c = rational_gcd(content_, o.content_);
  Rational alpha_q = content_ / c;
  Rational beta_q = o.content_ / c;
  alpha_q.canonicalize();
  beta_q.canonicalize();
  IntPolynomial numer = num_.mul_scalar(alpha_q.get_num()) * db_r +
                        o.num_.mul_scalar(beta_q.get_num()) * da_r;
  if (numer.is_zero()) return RationalFunction();
  Integer cn = numer.content();
  if (cn != 1) numer = numer.primitive_part();
  if (numer.leading() < 0) {
    numer = -numer;
    cn = -cn;
  }
  IntPolynomial p = IntPolynomial::gcd(numer, g);
  IntPolynomial den = (p.is_one() ? g : g.divide_exact(p)) * da_r * db_r;
  if (!p.is_one()) numer = numer.divide_exact(p);
  Rational content = c * Rational(cn);
  content.canonicalize();
  return RationalFunction(std::move(content), std::move(numer),
                          std::move(den));
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction();
  IntPolynomial g1 = IntPolynomial::gcd(num_, o.den_);
  IntPolynomial g2 = IntPolynomial::gcd(o.num_, den_);
  IntPolynomial na = g1.is_one() ? num_ : num_.divide_exact(g1);
  IntPolynomial nb = g2.is_one() ? o.num_ : o.num_.divide_exact(g2);
  IntPolynomial da = g2.is_one() ? den_ : den_.divide_exact(g2);
  IntPolynomial db = g1.is_one() ? o.den_ : o.den_.divide_exact(g1);
  Rational content = content_ * o.content_;
  content.canonicalize();
  return RationalFunction(std::move(content), na * nb, da * db);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Rational content = 1 / content_;
  content.canonicalize();
  // num and den are primitive and positive-leading already.
  return RationalFunction(std::move(content), den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  return *this * o.inverse();
}

RationalFunction RationalFunction::pow(long e) const {
  if (e == 0) return from_integer(1);
  if (is_zero()) {
    if (e < 0) throw DomainError("0 raised to a negative power");
    return RationalFunction();
  }
  const RationalFunction base = e < 0 ? inverse() : *this;
  unsigned long ue = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul
                           : static_cast<unsigned long>(e);
  // Components stay coprime and primitive under powers.
  return RationalFunction(rational_pow(base.content_, static_cast<long>(ue)),
                          base.num_.pow(ue), base.den_.pow(ue));
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return content_ == o.content_ && num_ == o.num_ && den_ == o.den_;
}

Rational RationalFunction::eval(const Rational& t0) const {
  if (is_zero()) return Rational(0);
  Rational d = den_.eval(t0);
  if (d == 0) {
    throw DomainError("pole at evaluation point t = " + t0.get_str());
  }
  Rational out = content_ * num_.eval(t0) / d;
  out.canonicalize();
  return out;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_zero()) return "(0)";
  std::ostringstream os;
  os << "(" << content_.get_str() << ")*(" << num_.to_string(var) << ")";
  if (!den_.is_one()) os << "/(" << den_.to_string(var) << ")";
  return os.str();
}

}  // namespace qeuler
