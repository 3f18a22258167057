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

#include "qeuler/symmetry.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "qeuler/errors.hpp"
#include "qeuler/q_euler.hpp"
#include "qeuler/q_zeta.hpp"
#include "qeuler/qbasics.hpp"

namespace qeuler {

namespace {

void require_positive(int v, const char* name) {
  if (v < 1) throw DomainError(std::string(name) + " must be >= 1");
}

void require_odd(int v, const char* name) {
  require_positive(v, name);
  if (v % 2 == 0) {
    throw DomainError(std::string(name) + " must be odd, got " +
                      std::to_string(v));
  }
}

std::string complex_str(std::complex<double> z) {
  std::string out = std::to_string(z.real());
  if (z.imag() != 0.0) {
    out += (z.imag() < 0 ? "-" : "+") + std::to_string(std::abs(z.imag())) +
           "i";
  }
  return out;
}

/// Complex power with the principal logarithm; integer exponents never touch
/// the branch.
std::complex<double> complex_pow(std::complex<double> base,
                                 std::complex<double> e) {
  if (e.imag() == 0.0 && e.real() == std::floor(e.real()) &&
      std::abs(e.real()) < 1e15) {
    return pow_int(base, static_cast<long>(e.real()));
  }
  if (base.imag() == 0.0 && base.real() <= 0.0) {
    if (base.real() == 0.0) throw DomainError("zero base in complex power");
    throw BranchCutError(
        "branch cut hit: complex power of a negative real value");
  }
  return std::exp(e * std::log(base));
}

}  // namespace

SymmetryParams SymmetryParams::for_exponent(int a, int b, int r,
                                            const Rational& x,
                                            std::complex<double> s,
                                            QBase base, SeriesControl ctrl,
                                            double check_tol) {
  require_odd(a, "a");
  require_odd(b, "b");
  return for_exponent_unchecked(a, b, r, x, s, std::move(base), ctrl,
                                check_tol);
}

SymmetryParams SymmetryParams::for_index(int a, int b, int r,
                                         const Rational& x, int n, QBase base,
                                         SeriesControl ctrl, double check_tol) {
  require_odd(a, "a");
  require_odd(b, "b");
  return for_index_unchecked(a, b, r, x, n, std::move(base), ctrl, check_tol);
}

SymmetryParams SymmetryParams::for_exponent_unchecked(
    int a, int b, int r, const Rational& x, std::complex<double> s,
    QBase base, SeriesControl ctrl, double check_tol) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(r, "r");
  SymmetryParams p;
  p.a_ = a;
  p.b_ = b;
  p.r_ = r;
  p.x_ = x;
  p.has_index_ = false;
  p.s_ = s;
  p.base_ = std::move(base);
  p.ctrl_ = ctrl;
  p.check_tol_ = check_tol;
  return p;
}

SymmetryParams SymmetryParams::for_index_unchecked(int a, int b, int r,
                                                   const Rational& x, int n,
                                                   QBase base,
                                                   SeriesControl ctrl,
                                                   double check_tol) {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(r, "r");
  if (n < 0) throw DomainError("index n must be >= 0");
  SymmetryParams p;
  p.a_ = a;
  p.b_ = b;
  p.r_ = r;
  p.x_ = x;
  p.has_index_ = true;
  p.n_ = n;
  p.base_ = std::move(base);
  p.ctrl_ = ctrl;
  p.check_tol_ = check_tol;
  return p;
}

int SymmetryParams::n() const {
  if (!has_index_) throw DomainError("params carry an exponent s, not n");
  return n_;
}

std::complex<double> SymmetryParams::s() const {
  if (has_index_) throw DomainError("params carry an index n, not s");
  return s_;
}

std::vector<std::pair<std::string, std::string>> SymmetryParams::describe()
    const {
  std::vector<std::pair<std::string, std::string>> out{
      {"a", std::to_string(a_)},
      {"b", std::to_string(b_)},
      {"r", std::to_string(r_)},
      {"x", x_.get_str()},
      {"q", base_.describe()},
      {"backend", backend_name(base_.backend())}};
  if (has_index_) {
    out.emplace_back("n", std::to_string(n_));
  } else {
    out.emplace_back("s", complex_str(s_));
  }
  return out;
}

std::vector<Integer> composition_counts(int r, int a) {
  require_positive(r, "r");
  require_positive(a, "a");
  std::vector<Integer> counts{Integer(1)};
  for (int level = 0; level < r; ++level) {
    std::vector<Integer> next(counts.size() + static_cast<size_t>(a) - 1,
                              Integer(0));
    for (size_t t = 0; t < counts.size(); ++t) {
      if (counts[t] == 0) continue;
      for (int j = 0; j < a; ++j) {
        next[t + static_cast<size_t>(j)] += counts[t];
      }
    }
    counts = std::move(next);
  }
  return counts;
}

Scalar s_sum(int n, int i, int r, int a, const QBase& q_eff) {
  if (i < 0 || i > n) throw DomainError("s_sum requires 0 <= i <= n");
  require_positive(r, "r");
  require_positive(a, "a");
  auto counts = composition_counts(r, a);
  Scalar acc = q_eff.from_rational(Rational(0));
  for (size_t t = 0; t < counts.size(); ++t) {
    long total = static_cast<long>(t);
    Scalar bracket_pow =
        i == 0 ? q_eff.one()
               : q_number(Rational(total), q_eff).pow(i);  // 0^0 = 1
    Scalar term = q_eff.from_integer(counts[t]) *
                  q_eff.qpow(Rational(n - i + 1) * total) * bracket_pow;
    acc = acc + (total % 2 == 0 ? term : -term);
  }
  return acc;
}

Scalar s_sum_direct(int n, int i, int r, int a, const QBase& q_eff) {
  if (i < 0 || i > n) throw DomainError("s_sum requires 0 <= i <= n");
  require_positive(r, "r");
  require_positive(a, "a");
  Scalar acc = q_eff.from_rational(Rational(0));
  std::vector<int> idx(static_cast<size_t>(r), 0);
  while (true) {
    long total = 0;
    for (int v : idx) total += v;
    Scalar bracket_pow = i == 0 ? q_eff.one()
                                : q_number(Rational(total), q_eff).pow(i);
    Scalar term = q_eff.qpow(Rational(n - i + 1) * total) * bracket_pow;
    acc = acc + (total % 2 == 0 ? term : -term);
    int level = 0;
    while (level < r && ++idx[static_cast<size_t>(level)] == a) {
      idx[static_cast<size_t>(level)] = 0;
      ++level;
    }
    if (level == r) break;
  }
  return acc;
}

namespace {

/// Shared j-sum shape of the zeta- and polynomial-level sides:
/// sum over j-tuples in [0,aa)^r of (-1)^{|j|} q^{bb |j|} f(bb x + (bb/aa)|j|),
/// grouped by the total |j|.
Scalar alternating_argument_sum(
    int aa, int bb, const SymmetryParams& p,
    const std::function<Scalar(const Rational&, long)>& f_of_arg) {
  auto counts = composition_counts(p.r(), aa);
  Scalar acc = p.base().from_rational(Rational(0));
  for (size_t t = 0; t < counts.size(); ++t) {
    long total = static_cast<long>(t);
    Rational j_part(bb * total, aa);
    j_part.canonicalize();
    Rational arg = Rational(bb) * p.x() + j_part;
    arg.canonicalize();
    Scalar term = p.base().from_integer(counts[t]) *
                  p.base().qpow(Rational(bb) * total) * f_of_arg(arg, total);
    acc = acc + (total % 2 == 0 ? term : -term);
  }
  return acc;
}

}  // namespace

Scalar zeta_symmetry_side(int aa, int bb, const SymmetryParams& p) {
  if (p.has_index()) {
    throw DomainError("zeta-level side needs exponent parameters");
  }
  if (p.base().backend() != Backend::Float) {
    throw BackendMismatchError(
        "the zeta-level identity is evaluated on the float backend");
  }
  const std::complex<double> s = p.s();
  QBase base_aa = p.base().rebased(Rational(aa));
  // Prefactor [2]_{q^bb}^r [bb]_q^s.
  std::complex<double> two_bb =
      pow_int(q_number(Rational(2), p.base().rebased(Rational(bb)))
                  .complex_value(),
              p.r());
  std::complex<double> bracket_bb =
      q_number(Rational(bb), p.base()).complex_value();
  std::complex<double> pre = two_bb * complex_pow(bracket_bb, s);

  // Split the side's series budget across the weighted zeta calls.
  auto counts = composition_counts(p.r(), aa);
  double weight_sum = 0.0;
  double aqb = std::abs(p.base().rebased(Rational(bb)).q_eff_complex());
  for (size_t t = 0; t < counts.size(); ++t) {
    weight_sum += counts[t].get_d() * std::pow(aqb, static_cast<double>(t));
  }
  SeriesControl inner = p.ctrl();
  inner.abs_tol =
      p.ctrl().abs_tol / std::max(1.0, weight_sum * std::abs(pre));

  Scalar sum = alternating_argument_sum(
      aa, bb, p, [&](const Rational& arg, long total) -> Scalar {
        if (is_integer(arg) && arg <= 0) {
          throw DomainError(
              "zeta argument " + arg.get_str() +
              " hits {0, -1, -2, ...} at j-total " + std::to_string(total));
        }
        ZetaQuery zq{s, arg, p.r(), base_aa, inner};
        return Scalar::floating(zeta_single_sum(zq).value);
      });
  return Scalar::floating(pre) * sum;
}

IdentityReport zeta_symmetry_report(const SymmetryParams& p) {
  Scalar lhs = zeta_symmetry_side(p.a(), p.b(), p);
  Scalar rhs = zeta_symmetry_side(p.b(), p.a(), p);
  auto params = p.describe();
  params.emplace_back("identity", "zeta-symmetry");
  return make_identity_report(std::move(lhs), std::move(rhs), p.check_tol(),
                              std::move(params));
}

Scalar polynomial_symmetry_side(int aa, int bb, const SymmetryParams& p) {
  if (!p.has_index()) {
    throw DomainError("polynomial-level side needs index parameters");
  }
  const int n = p.n();
  QBase base_aa = p.base().rebased(Rational(aa));
  ClosedFormParts parts = q_euler_closed_parts(n, p.r(), base_aa);
  auto counts = composition_counts(p.r(), aa);
  // sum_T w_T E(arg_T) with w_T = (-1)^T count_T q^{bb T} is rearranged to
  // prefactor * sum_k wc_k P_k / denominator where
  // P_k = sum_T w_T q_eff^{k arg_T} stays polynomial on the exact backend,
  // so the whole side costs a single fraction reduction.
  Scalar acc = p.base().from_rational(Rational(0));
  for (int k = 0; k <= n; ++k) {
    Scalar pk = p.base().from_rational(Rational(0));
    for (size_t t = 0; t < counts.size(); ++t) {
      long total = static_cast<long>(t);
      Rational j_part(bb * total, aa);
      j_part.canonicalize();
      Rational arg = Rational(bb) * p.x() + j_part;
      arg.canonicalize();
      Scalar term = p.base().from_integer(counts[t]) *
                    p.base().qpow(Rational(bb) * total) *
                    base_aa.qpow(Rational(k) * arg);
      pk = pk + (total % 2 == 0 ? term : -term);
    }
    acc = acc + parts.weighted_cofactors[static_cast<size_t>(k)] * pk;
  }
  Scalar sum = parts.prefactor * acc / parts.denominator;
  Scalar two_bb = q_number(Rational(2), p.base().rebased(Rational(bb)))
                      .pow(p.r());
  Scalar bracket_aa_n = q_number(Rational(aa), p.base()).pow(n);
  return two_bb * bracket_aa_n * sum;
}

IdentityReport polynomial_symmetry_report(const SymmetryParams& p) {
  Scalar lhs = polynomial_symmetry_side(p.a(), p.b(), p);
  Scalar rhs = polynomial_symmetry_side(p.b(), p.a(), p);
  auto params = p.describe();
  params.emplace_back("identity", "polynomial-symmetry");
  return make_identity_report(std::move(lhs), std::move(rhs), p.check_tol(),
                              std::move(params));
}

Scalar convolution_symmetry_side(int aa, int bb, const SymmetryParams& p) {
  if (!p.has_index()) {
    throw DomainError("convolution-level side needs index parameters");
  }
  const int n = p.n();
  QBase base_aa = p.base().rebased(Rational(aa));
  QBase base_bb = p.base().rebased(Rational(bb));
  Scalar bracket_a = q_number(Rational(aa), p.base());
  Scalar bracket_b = q_number(Rational(bb), p.base());
  Rational bx = Rational(bb) * p.x();
  bx.canonicalize();
  Scalar acc = p.base().from_rational(Rational(0));
  for (int i = 0; i <= n; ++i) {
    Scalar term =
        p.base().from_integer(binomial(static_cast<unsigned long>(n),
                                       static_cast<unsigned long>(i))) *
        bracket_a.pow(n - i) * bracket_b.pow(i) *
        q_euler_closed({n - i, p.r(), bx, base_aa, {}}) *
        s_sum(n, i, p.r(), aa, base_bb);
    acc = acc + term;
  }
  Scalar two_bb = q_number(Rational(2), base_bb).pow(p.r());
  return two_bb * acc;
}

IdentityReport convolution_symmetry_report(const SymmetryParams& p) {
  Scalar lhs = convolution_symmetry_side(p.a(), p.b(), p);
  Scalar rhs = convolution_symmetry_side(p.b(), p.a(), p);
  auto params = p.describe();
  params.emplace_back("identity", "convolution-symmetry");
  return make_identity_report(std::move(lhs), std::move(rhs), p.check_tol(),
                              std::move(params));
}

}  // namespace qeuler
