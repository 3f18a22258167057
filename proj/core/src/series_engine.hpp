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

// Internal float-backend engine shared by the q-Euler and q-zeta series.
// Both families sum
//   [2]_q^r * sum (-q)^{m_1+..+m_r} * bracket(total)^power
// with bracket(T) = [T + x]_q; the single-sum route groups tuples by total
// with binom(T+r-1, T) per total. Truncation uses rigorous geometric tail
// bounds (the term ratio is eventually dominated by |q|(M+r)/(M+1)).

#pragma once

#include <complex>

#include "qeuler/scalar.hpp"
#include "qeuler/series.hpp"

namespace qeuler::detail {

struct BracketPower {
  bool is_int = true;
  long n = 0;                      // exponent when is_int
  std::complex<double> p{0, 0};    // exponent otherwise

  static BracketPower integer(long n) { return {true, n, {0, 0}}; }
  static BracketPower general(std::complex<double> p);
};

struct SumSpec {
  int r = 1;  // >= 0; r = 0 degenerates to the single bracket at total 0
  Rational x{0};
  BracketPower power;
  QBase base = QBase::floating({0.5, 0.0});
  SeriesControl ctrl;
};

SeriesResult single_sum(const SumSpec& spec);
SeriesResult multi_sum(const SumSpec& spec);

}  // namespace qeuler::detail
