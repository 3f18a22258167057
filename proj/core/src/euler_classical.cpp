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

#include "qeuler/euler_classical.hpp"

#include <sstream>

#include "qeuler/errors.hpp"

namespace qeuler {

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending_coeffs)
    : c_(std::move(ascending_coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPolynomial::coeff(size_t i) const {
  return i < c_.size() ? c_[i] : Rational(0);
}

Rational RationalPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) {
    acc = acc * x + c_[i];
  }
  acc.canonicalize();
  return acc;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rational mag = abs(c_[i]);
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

std::vector<Rational> euler_numbers_order1(int n_max) {
  if (n_max < 0) throw DomainError("euler_numbers_order1 requires n_max >= 0");
  std::vector<Rational> e(static_cast<size_t>(n_max) + 1);
  e[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Rational s(0);
    for (int k = 0; k < n; ++k) {
      s += Rational(binomial(static_cast<unsigned long>(n),
                             static_cast<unsigned long>(k))) *
           e[static_cast<size_t>(k)];
    }
    Rational v = -s / 2;
    v.canonicalize();
    e[static_cast<size_t>(n)] = v;
  }
  return e;
}

std::vector<Rational> euler_numbers(int n_max, int r) {
  if (r < 1) throw DomainError("euler_numbers requires r >= 1");
  std::vector<Rational> base = euler_numbers_order1(n_max);
  std::vector<Rational> acc = base;
  for (int j = 1; j < r; ++j) {
    std::vector<Rational> next(acc.size(), Rational(0));
    for (size_t n = 0; n < acc.size(); ++n) {
      Rational s(0);
      for (size_t k = 0; k <= n; ++k) {
        s += Rational(binomial(n, k)) * acc[k] * base[n - k];
      }
      s.canonicalize();
      next[n] = s;
    }
    acc = std::move(next);
  }
  return acc;
}

RationalPolynomial euler_polynomial(int n, int r) {
  if (n < 0) throw DomainError("euler_polynomial requires n >= 0");
  std::vector<Rational> numbers = euler_numbers(n, r);
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
  // coefficient of x^{n-k} is binom(n,k) E_k^{(r)}
  for (int k = 0; k <= n; ++k) {
    coeffs[static_cast<size_t>(n - k)] =
        Rational(binomial(static_cast<unsigned long>(n),
                          static_cast<unsigned long>(k))) *
        numbers[static_cast<size_t>(k)];
    coeffs[static_cast<size_t>(n - k)].canonicalize();
  }
  return RationalPolynomial(std::move(coeffs));
}

}  // namespace qeuler
