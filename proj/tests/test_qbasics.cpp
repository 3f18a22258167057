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

#include <complex>

#include "qeuler/errors.hpp"
#include "qeuler/qbasics.hpp"
#include "test_util.hpp"

using namespace qeuler;
using qeuler_test::RationalGen;

TEST_CASE("q_number basics") {
  QBase qe = QBase::formal();
  CHECK(q_number(Rational(0), qe).is_zero());
  CHECK(q_number(Rational(1), qe) == qe.one());
  // [2]_q = 1 + q after canonical reduction
  CHECK(q_number(Rational(2), qe) == qe.one() + qe.q_eff());

  QBase qf = QBase::floating({0.5, 0.0});
  CHECK(q_number(Rational(3), qf).complex_value().real() ==
        doctest::Approx(1.75).epsilon(1e-14));
}

TEST_CASE("q_number_base and the rebasing identity") {
  QBase q = QBase::formal();
  RationalGen gen(5, 9);
  for (int it = 0; it < 25; ++it) {
    long a = gen.small_int(1, 6);
    Rational x = gen();
    QBase qd = QBase::formal(x.get_den().get_si());
    // [a]_q [x]_{q^a} = [ax]_q exactly
    Scalar lhs = q_number(Rational(a), qd) * q_number_base(x, qd, a);
    Scalar rhs = q_number(Rational(a) * x, qd);
    CHECK(lhs == rhs);
  }
  CHECK(q_number_base(Rational(2), q, 1) == q_number(Rational(2), q));
}

TEST_CASE("q_number_base fractional example") {
  // [1/3]_{q^3} with q = 1/8, D = 3 (so t = 1/2): (1-q)/(1-q^3) = 448/511
  QBase q = QBase::exact(Rational(1, 8), 3);
  Scalar v = q_number_base(Rational(1, 3), q, 3);
  Rational want(448, 511);
  want.canonicalize();  // = 64/73
  CHECK(eval_at(v, q.t0()) == want);
}

TEST_CASE("gauss binomial values and degenerate cases") {
  QBase q = QBase::formal();
  for (long m = 0; m <= 6; ++m) {
    CHECK(gauss_binomial(m, 1, q) == q.one());
  }
  // C_q(3, 2) = 1 + q + q^2
  Scalar v = gauss_binomial(2, 2, q);
  CHECK(v.exact_value().to_string() == "(1)*(1 + t + t^2)");
  // Gaussian binomials are polynomials in q on the exact backend.
  for (long m = 0; m <= 5; ++m) {
    for (long r = 1; r <= 4; ++r) {
      CHECK(gauss_binomial(m, r, q).exact_value().is_polynomial());
    }
  }
  CHECK(gauss_binomial_nk(4, -1, q).is_zero());
  CHECK(gauss_binomial_nk(4, 5, q).is_zero());
}

TEST_CASE("gauss binomial Pascal recurrence, exact, N <= 12") {
  QBase q = QBase::formal();
  for (long n = 1; n <= 12; ++n) {
    for (long k = 0; k <= n; ++k) {
      Scalar lhs = gauss_binomial_nk(n, k, q);
      Scalar rhs = gauss_binomial_nk(n - 1, k - 1, q) +
                   q.qpow(Rational(k)) * gauss_binomial_nk(n - 1, k, q);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("q -> 1 limits recover integers and binomials") {
  QBase q = QBase::formal();
  for (long x = 0; x <= 9; ++x) {
    CHECK(eval_at(q_number(Rational(x), q), Rational(1)) == Rational(x));
  }
  for (long n = 0; n <= 12; ++n) {
    for (long k = 0; k <= n; ++k) {
      CHECK(eval_at(gauss_binomial_nk(n, k, q), Rational(1)) ==
            Rational(binomial(static_cast<unsigned long>(n),
                              static_cast<unsigned long>(k))));
    }
  }
}

TEST_CASE("q_pochhammer basics") {
  QBase q = QBase::formal();
  Scalar z = q.qpow(Rational(2));  // an arbitrary exact scalar
  CHECK(q_pochhammer(z, q, 0) == q.one());
  CHECK(q_pochhammer(z, q, 1) == q.one() - z);
  // Manual product for r = 3.
  Scalar manual = (q.one() - z) * (q.one() - z * q.q_eff()) *
                  (q.one() - z * q.qpow(Rational(2)));
  CHECK(q_pochhammer(z, q, 3) == manual);
}

TEST_CASE("partial sums of gauss binomials approach 1/(z;q)_r") {
  // sum_m C_q(m+r-1, m) z^m -> 1/(z; q)_r for |z| < 1
  QBase q = QBase::floating({0.5, 0.0});
  std::complex<double> z{0.3, 0.1};
  for (long r = 1; r <= 3; ++r) {
    std::complex<double> acc{0.0, 0.0};
    for (long m = 0; m < 220; ++m) {
      acc += gauss_binomial(m, r, q).complex_value() * pow_int(z, m);
    }
    std::complex<double> poch =
        q_pochhammer(Scalar::floating(z), q, r).complex_value();
    CHECK(qeuler_test::cdist(acc, 1.0 / poch) < 1e-13);
  }
}
