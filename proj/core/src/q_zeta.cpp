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

#include "qeuler/q_zeta.hpp"

#include <string>

#include "qeuler/errors.hpp"
#include "qeuler/q_euler.hpp"
#include "series_engine.hpp"

namespace qeuler {

namespace {

void validate(const ZetaQuery& q) {
  if (q.r < 0) throw DomainError("order r must be >= 0");
  if (is_integer(q.x) && q.x <= 0) {
    throw DomainError("zeta argument x must avoid {0, -1, -2, ...}, got x = " +
                      q.x.get_str());
  }
}

detail::SumSpec to_spec(const ZetaQuery& q) {
  return {q.r, q.x, detail::BracketPower::general(-q.s), q.base, q.ctrl};
}

}  // namespace

SeriesResult zeta_multisum(const ZetaQuery& query) {
  validate(query);
  return detail::multi_sum(to_spec(query));
}

SeriesResult zeta_single_sum(const ZetaQuery& query) {
  validate(query);
  return detail::single_sum(to_spec(query));
}

IdentityReport interpolation_report(int n, int r, const Rational& x,
                                    const QBase& base,
                                    const SeriesControl& ctrl, double tol) {
  if (n < 0) throw DomainError("interpolation index n must be >= 0");
  if (r < 1) throw DomainError("order r must be >= 1");
  ZetaQuery zq{std::complex<double>(-static_cast<double>(n), 0.0), x, r, base,
               ctrl};
  Scalar lhs = Scalar::floating(zeta_single_sum(zq).value);
  Scalar rhs = q_euler_closed({n, r, x, base, {}});
  std::vector<std::pair<std::string, std::string>> params{
      {"n", std::to_string(n)},
      {"r", std::to_string(r)},
      {"x", x.get_str()},
      {"q", base.describe()},
      {"backend", backend_name(base.backend())}};
  return make_identity_report(std::move(lhs), std::move(rhs), tol,
                              std::move(params));
}

}  // namespace qeuler
