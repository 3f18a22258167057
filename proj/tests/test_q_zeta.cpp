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

#include <cmath>
#include <complex>
#include <limits>

#include "qeuler/errors.hpp"
#include "qeuler/q_euler.hpp"
#include "qeuler/q_zeta.hpp"
#include "test_util.hpp"

using namespace qeuler;
using qeuler_test::cdist;

TEST_CASE("s = 0 equals the zeroth q-Euler value") {
  for (int r = 1; r <= 3; ++r) {
    QBase q = QBase::floating({0.5, 0.0});
    ZetaQuery zq{{0.0, 0.0}, Rational(1), r, q, {}};
    auto z = zeta_single_sum(zq);
    auto e = q_euler_closed({0, r, Rational(1), q, {}}).complex_value();
    CHECK(cdist(z.value, e) < 1e-12);
    CHECK(cdist(z.value, {1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("r = 1 negative integer exponent matches the q-Euler value") {
  QBase q = QBase::floating({0.5, 0.0});
  ZetaQuery zq{{-1.0, 0.0}, Rational(1), 1, q, {}};
  auto z = zeta_single_sum(zq);
  auto e = q_euler_closed({1, 1, Rational(1), q, {}}).complex_value();
  CHECK(cdist(z.value, e) < 1e-10);
}

TEST_CASE("single and multi routes agree") {
  SeriesControl ctrl;
  ctrl.abs_tol = 1e-13;
  ctrl.max_terms = 600;
  QBase q = QBase::floating({0.5, 0.0});
  const std::complex<double> exps[] = {{2.0, 0.0}, {-3.0, 0.0}, {1.0, 1.0}};
  for (auto s : exps) {
    for (int r = 1; r <= 3; ++r) {
      ZetaQuery zq{s, Rational(1), r, q, ctrl};
      auto single = zeta_single_sum(zq);
      auto multi = zeta_multisum(zq);
      CHECK(cdist(single.value, multi.value) < 1e-12);
    }
  }
}

TEST_CASE("golden value: s = 2, x = 1, r = 2, q = 1/2") {
  // Recorded with abs_tol = 1e-14; both series routes reproduce
  // 1.599301297067095947986839... (25 digits, independent high-precision
  // summation).
  QBase q = QBase::floating({0.5, 0.0});
  SeriesControl ctrl;
  ctrl.abs_tol = 1e-14;
  ZetaQuery zq{{2.0, 0.0}, Rational(1), 2, q, ctrl};
  auto single = zeta_single_sum(zq);
  CHECK(cdist(single.value, {1.5993012970670959, 0.0}) < 1e-13);
  CHECK(single.tail_bound <= 1e-14);
  CHECK(single.terms_used < 200);
  auto multi = zeta_multisum(zq);
  CHECK(cdist(multi.value, {1.5993012970670959, 0.0}) < 1e-13);
}

TEST_CASE("interpolation at negative integers, both code paths") {
  SeriesControl ctrl;
  ctrl.abs_tol = 1e-12;
  for (int n = 0; n <= 5; ++n) {
    for (int r = 1; r <= 3; ++r) {
      auto rep = interpolation_report(n, r, Rational(1, 2),
                                      QBase::floating({0.6, 0.0}), ctrl);
      CHECK(rep.pass);
      CHECK(rep.abs_diff <= 1e-10 * 10);
    }
  }
}

TEST_CASE("zeta domain excludes non-positive integer x") {
  QBase q = QBase::floating({0.5, 0.0});
  CHECK_THROWS_AS(zeta_single_sum({{2.0, 0.0}, Rational(0), 1, q, {}}),
                  DomainError);
  CHECK_THROWS_AS(zeta_single_sum({{2.0, 0.0}, Rational(-2), 1, q, {}}),
                  DomainError);
  CHECK_THROWS_AS(interpolation_report(2, 1, Rational(0), q, {}),
                  DomainError);
  // Negative non-integer x is inside the domain.
  auto ok = zeta_single_sum({{2.0, 0.0}, Rational(-1, 2), 1, q, {}});
  CHECK(std::isfinite(ok.value.real()));
}

TEST_CASE("branch cut rejection for non-integer s") {
  // x = -1/2 makes the m = 0 bracket negative real; non-integer s must be
  // rejected, integer s sails through.
  QBase q = QBase::floating({0.5, 0.0});
  CHECK_THROWS_AS(zeta_single_sum({{2.5, 0.0}, Rational(-1, 2), 1, q, {}}),
                  BranchCutError);
  CHECK_NOTHROW(zeta_single_sum({{2.0, 0.0}, Rational(-1, 2), 1, q, {}}));
}

TEST_CASE("conjugate symmetry in s for real q and x") {
  QBase q = QBase::floating({0.4, 0.0});
  std::complex<double> s{1.3, 0.7};
  ZetaQuery zq{s, Rational(1), 2, q, {}};
  ZetaQuery zq_conj{std::conj(s), Rational(1), 2, q, {}};
  auto a = zeta_single_sum(zq).value;
  auto b = zeta_single_sum(zq_conj).value;
  CHECK(cdist(std::conj(a), b) < 1e-14);
}

TEST_CASE("monotone truncation: more terms never raise the tail estimate") {
  QBase q = QBase::floating({0.6, 0.0});
  double prev = std::numeric_limits<double>::infinity();
  for (int m : {40, 80, 160, 320}) {
    SeriesControl ctrl;
    ctrl.max_terms = m;
    ctrl.use_tail_bound = false;
    auto res = zeta_single_sum({{2.0, 0.0}, Rational(1), 2, q, ctrl});
    CHECK(res.tail_bound <= prev);
    prev = res.tail_bound;
  }
}

TEST_CASE("r = 0 degenerates to a single bracket power") {
  QBase q = QBase::floating({0.5, 0.0});
  auto res = zeta_single_sum({{2.0, 0.0}, Rational(3), 0, q, {}});
  std::complex<double> bracket = (1.0 - std::pow(0.5, 3.0)) / (1.0 - 0.5);
  CHECK(cdist(res.value, pow_int(bracket, -2)) < 1e-14);
}

TEST_CASE("exact backend is rejected by the series routes") {
  QBase qe = QBase::exact(Rational(1, 2));
  CHECK_THROWS_AS(zeta_single_sum({{2.0, 0.0}, Rational(1), 1, qe, {}}),
                  BackendMismatchError);
}
