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

#pragma once

#include <complex>
#include <random>

#include "qeuler/int_polynomial.hpp"
#include "qeuler/rational.hpp"
#include "qeuler/rational_function.hpp"

namespace qeuler_test {

inline double cdist(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b);
}

inline double rel_err(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

/// Deterministic small random rationals p/q with p in [-bound, bound],
/// q in [1, bound].
class RationalGen {
 public:
  explicit RationalGen(unsigned seed, long bound = 12)
      : rng_(seed), num_(-bound, bound), den_(1, bound) {}

  qeuler::Rational operator()() {
    qeuler::Rational r(num_(rng_), den_(rng_));
    r.canonicalize();
    return r;
  }

  qeuler::Rational nonzero() {
    for (;;) {
      auto r = (*this)();
      if (r != 0) return r;
    }
  }

  long small_int(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

 private:
  std::mt19937 rng_;
  std::uniform_int_distribution<long> num_, den_;
};

/// Random integer polynomials of degree <= max_deg with small coefficients.
class PolyGen {
 public:
  explicit PolyGen(unsigned seed, int max_deg = 4, long bound = 9)
      : rng_(seed), deg_(0, max_deg), coeff_(-bound, bound) {}

  qeuler::IntPolynomial operator()() {
    int d = deg_(rng_);
    std::vector<qeuler::Integer> c;
    c.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) c.emplace_back(coeff_(rng_));
    return qeuler::IntPolynomial(std::move(c));
  }

  qeuler::IntPolynomial nonzero() {
    for (;;) {
      auto p = (*this)();
      if (!p.is_zero()) return p;
    }
  }

  qeuler::RationalFunction rational_function() {
    return qeuler::RationalFunction::fraction((*this)(), nonzero());
  }

  qeuler::RationalFunction nonzero_rational_function() {
    for (;;) {
      auto f = rational_function();
      if (!f.is_zero()) return f;
    }
  }

 private:
  std::mt19937 rng_;
  std::uniform_int_distribution<int> deg_;
  std::uniform_int_distribution<long> coeff_;
};

}  // namespace qeuler_test
