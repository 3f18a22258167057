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
#include <vector>

#include "qeuler/errors.hpp"
#include "qeuler/euler_classical.hpp"
#include "qeuler/q_euler.hpp"
#include "test_util.hpp"

using namespace qeuler;
using qeuler_test::cdist;

namespace {

const std::vector<std::complex<double>> kFloatQs = {
    {0.3, 0.0}, {0.5, 0.0}, {0.5, 0.2}};
const std::vector<Rational> kXs = {Rational(0), Rational(1, 2), Rational(1),
                                   Rational(2)};

}  // namespace

TEST_CASE("order zero index: all three routes give 1") {
  for (auto qv : kFloatQs) {
    QBase q = QBase::floating(qv);
    for (int r = 1; r <= 3; ++r) {
      for (const auto& x : kXs) {
        QEulerQuery query{0, r, x, q, {}};
        CHECK(cdist(q_euler_multisum(query).value, {1.0, 0.0}) < 1e-12);
        CHECK(cdist(q_euler_single_sum(query).value, {1.0, 0.0}) < 1e-12);
        CHECK(cdist(q_euler_closed(query).complex_value(), {1.0, 0.0}) <
              1e-14);
      }
    }
  }
  // Exact backend: exactly one.
  QBase qe = QBase::formal();
  CHECK(q_euler_closed({0, 2, Rational(1), qe, {}}) == qe.one());
}

TEST_CASE("three-route agreement on a small grid") {
  SeriesControl ctrl;
  ctrl.abs_tol = 1e-13;
  ctrl.max_terms = 600;
  for (auto qv : kFloatQs) {
    QBase q = QBase::floating(qv);
    for (int n = 0; n <= 4; ++n) {
      for (int r = 1; r <= 3; ++r) {
        for (const auto& x : kXs) {
          QEulerQuery query{n, r, x, q, ctrl};
          auto multi = q_euler_multisum(query);
          auto single = q_euler_single_sum(query);
          auto closed = q_euler_closed(query).complex_value();
          CHECK(cdist(multi.value, single.value) < 1e-12);
          CHECK(cdist(single.value, closed) < 1e-12);
          CHECK(cdist(multi.value, closed) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("frozen exact values at q = 1/2") {
  QBase q = QBase::exact(Rational(1, 2));
  // Independently computed by exact-rational summation of the finite form.
  CHECK(eval_at(q_euler_closed({1, 1, Rational(0), q, {}}), q.t0()) ==
        Rational(-2, 5));
  CHECK(eval_at(q_euler_closed({2, 2, Rational(1), q, {}}), q.t0()) ==
        Rational(4, 225));
  CHECK(eval_at(q_euler_closed({3, 2, Rational(0), q, {}}), q.t0()) ==
        Rational(3512, 21675));
}

TEST_CASE("classical limit: q -> 1- recovers the order-1 value") {
  QBase q = QBase::floating({0.9999, 0.0});
  SeriesControl ctrl;
  ctrl.max_terms = 500000;
  ctrl.abs_tol = 1e-4;
  auto res = q_euler_single_sum({1, 1, Rational(0), q, ctrl});
  CHECK(cdist(res.value, {-0.5, 0.0}) < 1e-3);
  // The multisum at r = 1 is the same series.
  auto multi = q_euler_multisum({1, 1, Rational(0), q, ctrl});
  CHECK(cdist(multi.value, res.value) < 1e-3);
}

TEST_CASE("exact classical limit at t = 1") {
  QBase q = QBase::formal();
  for (int n = 0; n <= 6; ++n) {
    for (int r = 1; r <= 3; ++r) {
      auto poly = euler_polynomial(n, r);
      for (long x = 0; x <= 2; ++x) {
        Scalar v = q_euler_closed({n, r, Rational(x), q, {}});
        // The (1-q)^{-n} factor must have cancelled in canonical form.
        CHECK(eval_at(v, Rational(1)) == poly.eval(Rational(x)));
      }
    }
  }
}

TEST_CASE("closed-form coefficients reconstruct the closed form") {
  QBase qx = QBase::formal(2);
  auto coeffs = q_euler_closed_coefficients(3, 2, qx);
  REQUIRE(coeffs.size() == 4);
  Scalar acc = qx.from_rational(Rational(0));
  Rational x(3, 2);
  for (int k = 0; k <= 3; ++k) {
    acc = acc + coeffs[static_cast<size_t>(k)] * qx.qpow(Rational(k) * x);
  }
  CHECK(acc == q_euler_closed({3, 2, x, qx, {}}));
}

TEST_CASE("addition theorem exact and degenerate cases") {
  // Numeric exact base q = 2/5 at integer arguments.
  QBase q25 = QBase::exact(Rational(2, 5));
  for (int n = 0; n <= 5; ++n) {
    auto rep = addition_report(n, 2, Rational(1), Rational(2), q25);
    CHECK(rep.pass);
    CHECK(rep.exact_equal);
    CHECK(eval_at(rep.lhs, q25.t0()) == eval_at(rep.rhs, q25.t0()));
  }
  // y = 0 base case and x = 0 collapse (formal base, fractional arguments).
  for (int n = 0; n <= 4; ++n) {
    CHECK(addition_report(n, 2, Rational(0), Rational(3, 2), QBase::formal(2))
              .pass);
    CHECK(addition_report(n, 2, Rational(3, 2), Rational(0), QBase::formal(2))
              .pass);
  }
  const std::vector<Rational> vals = {Rational(1, 2), Rational(1),
                                      Rational(2)};
  for (int n = 0; n <= 6; ++n) {
    for (int r = 1; r <= 3; ++r) {
      for (const auto& x : vals) {
        for (const auto& y : vals) {
          QBase base = QBase::formal(Integer(x.get_den() * y.get_den()).get_si());
          auto rep = addition_report(n, r, x, y, base);
          CHECK(rep.pass);
          CHECK(rep.exact_equal);
        }
      }
    }
  }
}

TEST_CASE("addition theorem is transitive across regroupings") {
  // Values via (x, y+z) and (x+y, z) agree: both equal E(x+y+z).
  QBase q = QBase::formal();
  Rational x(1), y(2), z(1);
  for (int n = 0; n <= 4; ++n) {
    auto r1 = addition_report(n, 2, x, y + z, q);
    auto r2 = addition_report(n, 2, x + y, z, q);
    CHECK(r1.pass);
    CHECK(r2.pass);
    CHECK(r1.lhs == r2.lhs);  // same E_n(x+y+z)
    CHECK(r1.rhs == r2.rhs);
  }
}

TEST_CASE("reflection identities: trivial and degenerate cases") {
  QBase q = QBase::formal();
  // m = n = 0: both sides are E_0 terms = 1.
  for (auto variant :
       {ReflectionVariant::Weighted, ReflectionVariant::Plain}) {
    auto rep = reflection_report(0, 0, 2, Rational(1), Rational(2), q,
                                 variant);
    CHECK(rep.pass);
    CHECK(rep.lhs == q.one());
  }
  // x = 0 degenerates under the 0^0 = 1 convention to E_{m+n}(y) on both
  // sides.
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      auto rep = reflection_report(m, n, 2, Rational(0), Rational(1), q,
                                   ReflectionVariant::Plain);
      CHECK(rep.pass);
      auto expect = q_euler_closed({m + n, 2, Rational(1), q, {}});
      CHECK(rep.lhs == expect);
    }
  }
}

TEST_CASE("reflection identities exact at q = 1/3") {
  QBase q = QBase::exact(Rational(1, 3));
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (int r = 1; r <= 2; ++r) {
        auto w = reflection_report(m, n, r, Rational(1), Rational(2), q,
                                   ReflectionVariant::Weighted);
        auto p = reflection_report(m, n, r, Rational(1), Rational(2), q,
                                   ReflectionVariant::Plain);
        CHECK(w.pass);
        CHECK(p.pass);
        // With x = 1 the two variants differ by q^{-n} on both sides.
        Scalar scale = q.qpow(Rational(-n));
        CHECK(p.lhs == w.lhs * scale);
        CHECK(p.rhs == w.rhs * scale);
      }
    }
  }
}

TEST_CASE("series error paths") {
  QBase q = QBase::floating({0.5, 0.0});
  SeriesControl tight;
  tight.max_terms = 3;
  tight.abs_tol = 1e-14;
  CHECK_THROWS_AS(q_euler_single_sum({4, 2, Rational(1), q, tight}),
                  ConvergenceError);
  CHECK_THROWS_AS(q_euler_multisum({4, 2, Rational(1), q, tight}),
                  ConvergenceError);
  // Without the tail-bound policy the truncation is returned as-is.
  SeriesControl fixed;
  fixed.max_terms = 80;
  fixed.use_tail_bound = false;
  auto res = q_euler_single_sum({2, 2, Rational(1), q, fixed});
  CHECK(res.terms_used == 80);
  CHECK(res.tail_bound > 0.0);

  QBase qe = QBase::exact(Rational(1, 2));
  CHECK_THROWS_AS(q_euler_closed({2, 1, Rational(1, 3), qe, {}}),
                  UnrepresentableError);
  CHECK_THROWS_AS(q_euler_multisum({2, 1, Rational(1), qe, {}}),
                  BackendMismatchError);
  CHECK_THROWS_AS(q_euler_closed({-1, 1, Rational(0), q, {}}), DomainError);
  CHECK_THROWS_AS(q_euler_closed({2, 0, Rational(0), q, {}}), DomainError);
}
