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

#include <doctest.h>

#include "qeuler/euler_classical.hpp"

using namespace qeuler;

TEST_CASE("order-1 Euler numbers") {
  auto e = euler_numbers_order1(8);
  CHECK(e[0] == Rational(1));
  CHECK(e[1] == Rational(-1, 2));
  CHECK(e[2] == Rational(0));
  CHECK(e[3] == Rational(1, 4));
  CHECK(e[4] == Rational(0));
  CHECK(e[5] == Rational(-1, 2));
  // Odd-index pattern continues; even indices vanish beyond 0.
  CHECK(e[6] == Rational(0));
  CHECK(e[8] == Rational(0));
}

TEST_CASE("euler_polynomial small cases") {
  for (int r = 1; r <= 4; ++r) {
    auto p0 = euler_polynomial(0, r);
    CHECK(p0.degree() == 0);
    CHECK(p0.coeff(0) == Rational(1));
    // E_1^{(r)}(x) = x - r/2
    auto p1 = euler_polynomial(1, r);
    CHECK(p1.coeff(1) == Rational(1));
    Rational want(-r, 2);
    want.canonicalize();
    CHECK(p1.coeff(0) == want);
  }
  CHECK(euler_polynomial(1, 1).to_string() == "x - 1/2");
}

TEST_CASE("degree and leading coefficient") {
  for (int n = 0; n <= 10; ++n) {
    for (int r = 1; r <= 3; ++r) {
      auto p = euler_polynomial(n, r);
      CHECK(p.degree() == n);
      CHECK(p.coeff(static_cast<size_t>(n)) == Rational(1));
    }
  }
}

TEST_CASE("order composition: generating functions multiply") {
  // The binomial convolution of the order-r1 and order-r2 number sequences
  // is the order-(r1+r2) sequence.
  const int n_max = 10;
  for (int r1 = 1; r1 <= 4; ++r1) {
    for (int r2 = 1; r1 + r2 <= 5; ++r2) {
      auto a = euler_numbers(n_max, r1);
      auto b = euler_numbers(n_max, r2);
      auto c = euler_numbers(n_max, r1 + r2);
      for (size_t n = 0; n <= n_max; ++n) {
        Rational s(0);
        for (size_t k = 0; k <= n; ++k) {
          s += Rational(binomial(n, k)) * a[k] * b[n - k];
        }
        s.canonicalize();
        CHECK(s == c[n]);
      }
    }
  }
}
