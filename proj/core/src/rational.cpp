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

#include "qeuler/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "qeuler/errors.hpp"

namespace qeuler {

double to_double(const Rational& r) { return r.get_d(); }

long to_long_exact(const Rational& r) {
  if (!is_integer(r)) {
    throw DomainError("expected an integer rational, got " + to_string(r));
  }
  if (!r.get_num().fits_slong_p()) {
    throw DomainError("integer out of range: " + to_string(r));
  }
  return r.get_num().get_si();
}

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw DomainError("0 raised to a negative power");
    return Rational(0);
  }
  Rational b = base;
  bool invert = e < 0;
  unsigned long ue = invert ? static_cast<unsigned long>(-(e + 1)) + 1ul
                            : static_cast<unsigned long>(e);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), ue);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), ue);
  out.canonicalize();
  if (invert) out = 1 / out;
  return out;
}

Integer integer_pow(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  Integer num = gcd(a.get_num(), b.get_num());
  Integer den = lcm(a.get_den(), b.get_den());
  Rational out(num, den);
  out.canonicalize();
  return abs(out);
}

std::optional<Rational> exact_nth_root(const Rational& r, unsigned long n) {
  if (n == 0) throw DomainError("0th root");
  if (r < 0) return std::nullopt;
  Integer num, den;
  int num_exact = mpz_root(num.get_mpz_t(), r.get_num().get_mpz_t(), n);
  int den_exact = mpz_root(den.get_mpz_t(), r.get_den().get_mpz_t(), n);
  if (!num_exact || !den_exact) return std::nullopt;
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    // Decimal literal: digits '.' digits -> integer / 10^k.
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") {
      throw DomainError("bad rational literal: " + text);
    }
    for (size_t i = 0; i < digits.size(); ++i) {
      if (i == 0 && (digits[i] == '-' || digits[i] == '+')) continue;
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
        throw DomainError("bad rational literal: " + text);
      }
    }
    Rational out(Integer(digits), integer_pow(Integer(10), frac_len));
    out.canonicalize();
    return out;
  }
  try {
    Rational out(text);
    out.canonicalize();
    return out;
  } catch (const std::invalid_argument&) {
    throw DomainError("bad rational literal: " + text);
  }
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qeuler
