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

#include "qeuler/qbasics.hpp"

#include "qeuler/errors.hpp"

namespace qeuler {

Scalar q_number(const Rational& x, const QBase& q) {
  Scalar one = q.one();
  return (one - q.qpow(x)) / (one - q.qpow(Rational(1)));
}

Scalar q_number_base(const Rational& x, const QBase& q, long a) {
  if (a < 1) throw DomainError("q_number_base requires a >= 1");
  return q_number(x, q.rebased(Rational(a)));
}

Scalar gauss_binomial_nk(long n, long k, const QBase& q) {
  if (n < 0) throw DomainError("gauss_binomial_nk requires n >= 0");
  Scalar one = q.one();
  if (k < 0 || k > n) return one - one;  // zero on this backend
  Scalar acc = one;
  for (long i = 1; i <= k; ++i) {
    acc = acc * (one - q.qpow(Rational(n - k + i))) /
          (one - q.qpow(Rational(i)));
  }
  return acc;
}

Scalar gauss_binomial(long m, long r, const QBase& q) {
  if (m < 0 || r < 1) {
    throw DomainError("gauss_binomial requires m >= 0 and r >= 1");
  }
  return gauss_binomial_nk(m + r - 1, m, q);
}

Scalar q_pochhammer(const Scalar& z, const QBase& q, long r) {
  if (r < 0) throw DomainError("q_pochhammer requires r >= 0");
  Scalar one = q.one();
  Scalar acc = one;
  for (long j = 0; j < r; ++j) {
    acc = acc * (one - z * q.qpow(Rational(j)));
  }
  return acc;
}

}  // namespace qeuler
