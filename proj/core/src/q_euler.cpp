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

#include "qeuler/q_euler.hpp"

#include <string>

#include "qeuler/errors.hpp"
#include "qeuler/qbasics.hpp"
#include "series_engine.hpp"

namespace qeuler {

namespace {

void validate(const QEulerQuery& q) {
  if (q.n < 0) throw DomainError("coefficient index n must be >= 0");
  if (q.r < 1) throw DomainError("order r must be >= 1");
}

std::vector<std::pair<std::string, std::string>> base_params(
    int n, int r, const Rational& x, const QBase& base) {
  return {{"n", std::to_string(n)},
          {"r", std::to_string(r)},
          {"x", x.get_str()},
          {"q", base.describe()},
          {"backend", backend_name(base.backend())}};
}

}  // namespace

SeriesResult q_euler_multisum(const QEulerQuery& query) {
  validate(query);
  detail::SumSpec spec{query.r, query.x,
                       detail::BracketPower::integer(query.n), query.base,
                       query.ctrl};
  return detail::multi_sum(spec);
}

SeriesResult q_euler_single_sum(const QEulerQuery& query) {
  validate(query);
  detail::SumSpec spec{query.r, query.x,
                       detail::BracketPower::integer(query.n), query.base,
                       query.ctrl};
  return detail::single_sum(spec);
}

ClosedFormParts q_euler_closed_parts(int n, int r, const QBase& base) {
  if (n < 0) throw DomainError("coefficient index n must be >= 0");
  if (r < 1) throw DomainError("order r must be >= 1");
  Scalar one = base.one();
  Scalar qe = base.q_eff();
  size_t count = static_cast<size_t>(n) + 1;

  std::vector<Scalar> factors;  // (1 + q^{k+1})^r
  factors.reserve(count);
  for (int k = 0; k <= n; ++k) {
    factors.push_back((one + base.qpow(Rational(k + 1))).pow(r));
  }
  // prefix[k] = prod_{j<k} factors[j], suffix[k] = prod_{j>k} factors[j].
  std::vector<Scalar> prefix(count, one), suffix(count, one);
  for (size_t k = 1; k < count; ++k) prefix[k] = prefix[k - 1] * factors[k - 1];
  for (size_t k = count - 1; k-- > 0;) suffix[k] = suffix[k + 1] * factors[k + 1];

  ClosedFormParts parts;
  parts.weighted_cofactors.reserve(count);
  for (int k = 0; k <= n; ++k) {
    Scalar wc = base.from_integer(binomial(static_cast<unsigned long>(n),
                                           static_cast<unsigned long>(k))) *
                prefix[static_cast<size_t>(k)] * suffix[static_cast<size_t>(k)];
    parts.weighted_cofactors.push_back(k % 2 == 0 ? wc : -wc);
  }
  parts.denominator =
      (one - qe).pow(n) * prefix[count - 1] * factors[count - 1];
  parts.prefactor = (one + qe).pow(r);
  return parts;
}

std::vector<Scalar> q_euler_closed_coefficients(int n, int r,
                                                const QBase& base) {
  ClosedFormParts parts = q_euler_closed_parts(n, r, base);
  std::vector<Scalar> c;
  c.reserve(parts.weighted_cofactors.size());
  for (const auto& wc : parts.weighted_cofactors) {
    c.push_back(parts.prefactor * wc / parts.denominator);
  }
  return c;
}

Scalar q_euler_closed(const QEulerQuery& query) {
  validate(query);
  ClosedFormParts parts =
      q_euler_closed_parts(query.n, query.r, query.base);
  Scalar acc = query.base.from_rational(Rational(0));
  for (int k = 0; k <= query.n; ++k) {
    acc = acc + parts.weighted_cofactors[static_cast<size_t>(k)] *
                    query.base.qpow(Rational(k) * query.x);
  }
  return parts.prefactor * acc / parts.denominator;
}

IdentityReport addition_report(int n, int r, const Rational& x,
                               const Rational& y, const QBase& base,
                               double tol) {
  if (n < 0 || r < 1) throw DomainError("addition_report: n >= 0, r >= 1");
  Rational xy = x + y;
  xy.canonicalize();
  Scalar lhs = q_euler_closed({n, r, xy, base, {}});
  Scalar bracket_x = q_number(x, base);
  Scalar rhs = base.from_rational(Rational(0));
  for (int i = 0; i <= n; ++i) {
    Scalar term = base.from_integer(binomial(static_cast<unsigned long>(n),
                                             static_cast<unsigned long>(i))) *
                  base.qpow(x * i) * q_euler_closed({i, r, y, base, {}}) *
                  bracket_x.pow(n - i);
    rhs = rhs + term;
  }
  auto params = base_params(n, r, x, base);
  params.emplace_back("y", y.get_str());
  return make_identity_report(std::move(lhs), std::move(rhs), tol,
                              std::move(params));
}

IdentityReport reflection_report(int m, int n, int r, const Rational& x,
                                 const Rational& y, const QBase& base,
                                 ReflectionVariant variant, double tol) {
  if (m < 0 || n < 0 || r < 1) {
    throw DomainError("reflection_report: m, n >= 0, r >= 1");
  }
  const bool weighted = variant == ReflectionVariant::Weighted;
  Scalar bracket_x = q_number(x, base);
  Scalar bracket_neg_x = q_number(Rational(-x), base);
  Rational xy = x + y;
  xy.canonicalize();

  Scalar lhs = base.from_rational(Rational(0));
  for (int k = 0; k <= m; ++k) {
    Rational e = weighted ? Rational(k + n) * x : Rational(k) * x;
    Scalar term = base.from_integer(binomial(static_cast<unsigned long>(m),
                                             static_cast<unsigned long>(k))) *
                  base.qpow(e) * q_euler_closed({k + n, r, y, base, {}}) *
                  bracket_x.pow(m - k);
    lhs = lhs + term;
  }

  Scalar rhs = base.from_rational(Rational(0));
  for (int k = 0; k <= n; ++k) {
    Rational e = weighted ? Rational(n - k) * x : Rational(-k) * x;
    Scalar term = base.from_integer(binomial(static_cast<unsigned long>(n),
                                             static_cast<unsigned long>(k))) *
                  base.qpow(e) * q_euler_closed({m + k, r, xy, base, {}}) *
                  bracket_neg_x.pow(n - k);
    rhs = rhs + term;
  }

  auto params = base_params(n, r, x, base);
  params.emplace_back("m", std::to_string(m));
  params.emplace_back("y", y.get_str());
  params.emplace_back("variant", weighted ? "weighted" : "plain");
  return make_identity_report(std::move(lhs), std::move(rhs), tol,
                              std::move(params));
}

}  // namespace qeuler
