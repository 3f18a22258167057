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

#include "series_engine.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qeuler/errors.hpp"

namespace qeuler::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Engine {
  explicit Engine(const SumSpec& spec) : s(spec) {
    if (s.base.backend() != Backend::Float) {
      throw BackendMismatchError("series evaluation is float-backend only");
    }
    if (s.r < 0) throw DomainError("order r must be >= 0");
    if (s.ctrl.max_terms < 1) throw DomainError("max_terms must be >= 1");
    qe = s.base.q_eff_complex();
    aq = std::abs(qe);
    if (aq >= 1.0) throw DomainError("effective |q^scale| must be < 1");
    qx = s.base.qpow(s.x).complex_value();
    qxa = std::abs(qx);
    one_minus = 1.0 - qe;
    om_abs = std::abs(one_minus);
    pre = pow_int(1.0 + qe, s.r);
    pre_abs = std::abs(pre);
    if (!s.power.is_int) {
      pnorm = std::abs(s.power.p);
    }
  }

  std::complex<double> bracket(const std::complex<double>& zp) const {
    return (1.0 - zp) / one_minus;
  }

  std::complex<double> bracket_pow(std::complex<double> br,
                                   const std::string& where) const {
    if (s.power.is_int) {
      if (s.power.n < 0 && br == std::complex<double>(0.0, 0.0)) {
        throw DomainError("zero bracket raised to a negative power " + where);
      }
      return pow_int(br, s.power.n);
    }
    if (br.imag() == 0.0 && br.real() <= 0.0) {
      if (br.real() == 0.0) {
        throw DomainError("zero bracket in complex power " + where);
      }
      throw BranchCutError("branch cut hit: bracket on the negative real axis " +
                           where);
    }
    return std::exp(s.power.p * std::log(br));
  }

  // Bound on |bracket(T)^power| over all totals T >= m. Infinity when the
  // bracket may still be too close to zero for the closed-form bound.
  double bracket_bound_from(int m) const {
    double axm = qxa * std::pow(aq, m);
    double hi = (1.0 + axm) / om_abs;
    if (s.power.is_int) {
      if (s.power.n >= 0) return std::pow(hi, static_cast<double>(s.power.n));
      double lo = (1.0 - axm) / om_abs;
      if (lo <= 0.0) return kInf;
      return std::pow(lo, static_cast<double>(s.power.n));
    }
    double lo = (1.0 - axm) / om_abs;
    if (lo <= 0.0) return kInf;
    double big_log =
        std::max(std::abs(std::log(lo)), std::abs(std::log(hi))) +
        std::numbers::pi;
    return std::exp(pnorm * big_log);
  }

  // Tail of the single sum from term index m on, including the [2]^r factor;
  // `count` is binom(m+r-1, m).
  double single_tail(int m, double count) const {
    double ratio = aq * (static_cast<double>(m) + s.r) / (m + 1.0);
    if (ratio >= 1.0) return kInf;
    double g = bracket_bound_from(m);
    if (g == kInf) return kInf;
    return pre_abs * count * std::pow(aq, m) * g / (1.0 - ratio);
  }

  // Tail of the r-fold sum when every index is capped below M: the tuples
  // outside the box lie in r slabs {m_l >= M}, each weighted by
  // aq^M/(1-aq)^r, and every such tuple has total >= M.
  double multi_tail(int m_cap) const {
    double g = bracket_bound_from(m_cap);
    if (g == kInf) return kInf;
    return pre_abs * s.r * std::pow(aq, m_cap) /
           std::pow(1.0 - aq, s.r) * g;
  }

  const SumSpec& s;
  std::complex<double> qe, qx, one_minus, pre;
  double aq = 0, qxa = 0, om_abs = 0, pre_abs = 0, pnorm = 0;
};

}  // namespace

BracketPower BracketPower::general(std::complex<double> p) {
  if (p.imag() == 0.0 && p.real() == std::floor(p.real()) &&
      std::abs(p.real()) < 1e15) {
    return integer(static_cast<long>(p.real()));
  }
  BracketPower bp;
  bp.is_int = false;
  bp.p = p;
  return bp;
}

SeriesResult single_sum(const SumSpec& spec) {
  Engine e(spec);
  if (spec.r == 0) {
    auto br = e.bracket(e.qx);
    return {e.bracket_pow(br, "at m = 0"), 0.0, 1};
  }
  std::complex<double> acc{0.0, 0.0};
  double count = 1.0;                 // binom(m+r-1, m)
  std::complex<double> w{1.0, 0.0};   // (-q)^m
  std::complex<double> zp = e.qx;     // q^{x+m}
  for (int m = 0;; ++m) {
    double tail = e.single_tail(m, count);
    if (spec.ctrl.use_tail_bound && tail <= spec.ctrl.abs_tol) {
      return {e.pre * acc, tail, m};
    }
    if (m >= spec.ctrl.max_terms) {
      if (spec.ctrl.use_tail_bound) {
        throw ConvergenceError(
            "not converged: tail bound " + std::to_string(tail) + " > " +
            std::to_string(spec.ctrl.abs_tol) + " after " +
            std::to_string(spec.ctrl.max_terms) + " terms");
      }
      return {e.pre * acc, tail, m};
    }
    auto br = e.bracket(zp);
    acc += count * w * e.bracket_pow(br, "at m = " + std::to_string(m));
    count *= (static_cast<double>(m) + spec.r) / (m + 1.0);
    w *= -e.qe;
    zp *= e.qe;
  }
}

SeriesResult multi_sum(const SumSpec& spec) {
  Engine e(spec);
  if (spec.r == 0) {
    auto br = e.bracket(e.qx);
    return {e.bracket_pow(br, "at m = 0"), 0.0, 1};
  }
  int cap = -1;
  double tail = kInf;
  for (int m = 1; m <= spec.ctrl.max_terms; ++m) {
    tail = e.multi_tail(m);
    if (tail <= spec.ctrl.abs_tol) {
      cap = m;
      break;
    }
  }
  if (cap < 0) {
    if (spec.ctrl.use_tail_bound) {
      throw ConvergenceError(
          "not converged: multisum tail bound " + std::to_string(tail) +
          " > " + std::to_string(spec.ctrl.abs_tol) + " at per-index cap " +
          std::to_string(spec.ctrl.max_terms));
    }
    cap = spec.ctrl.max_terms;
    tail = e.multi_tail(cap);
  }
  double tuples = std::pow(static_cast<double>(cap), spec.r);
  if (tuples > 6e7) {
    throw ConvergenceError(
        "not converged within a practical budget: the r-fold sum needs " +
        std::to_string(cap) + "^" + std::to_string(spec.r) +
        " tuples; tighten q, relax abs_tol, or use the single-sum route");
  }

  long tmax = static_cast<long>(cap - 1) * spec.r;
  std::vector<std::complex<double>> brpow(static_cast<size_t>(tmax) + 1);
  std::complex<double> zp = e.qx;
  for (long t = 0; t <= tmax; ++t) {
    auto br = e.bracket(zp);
    brpow[static_cast<size_t>(t)] = e.bracket_pow(
        br, "at tuple (" + std::to_string(t) + ", 0, ...) with total " +
                std::to_string(t));
    zp *= e.qe;
  }

  std::complex<double> acc{0.0, 0.0};
  auto enumerate = [&](auto&& self, int level, std::complex<double> weight,
                       long total) -> void {
    if (level == spec.r) {
      acc += weight * brpow[static_cast<size_t>(total)];
      return;
    }
    std::complex<double> w = weight;
    for (int m = 0; m < cap; ++m) {
      self(self, level + 1, w, total + m);
      w *= -e.qe;
    }
  };
  enumerate(enumerate, 0, {1.0, 0.0}, 0);
  return {e.pre * acc, tail, cap};
}

}  // namespace qeuler::detail
