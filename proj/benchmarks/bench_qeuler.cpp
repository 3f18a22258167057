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

#include <benchmark/benchmark.h>

#include "qeuler/q_euler.hpp"
#include "qeuler/q_zeta.hpp"
#include "qeuler/symmetry.hpp"

namespace {

using namespace qeuler;

void BM_ClosedFloat(benchmark::State& state) {
  QBase q = QBase::floating({0.5, 0.0});
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_euler_closed({n, 3, Rational(1), q, {}}));
  }
}
BENCHMARK(BM_ClosedFloat)->Arg(4)->Arg(8)->Arg(16);

void BM_SingleSumFloat(benchmark::State& state) {
  QBase q = QBase::floating({0.5, 0.0});
  int n = static_cast<int>(state.range(0));
  SeriesControl ctrl;
  ctrl.abs_tol = 1e-12;
  ctrl.max_terms = 2000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_euler_single_sum({n, 3, Rational(1), q, ctrl}));
  }
}
BENCHMARK(BM_SingleSumFloat)->Arg(4)->Arg(8);

void BM_MultisumFloat(benchmark::State& state) {
  QBase q = QBase::floating({0.5, 0.0});
  int r = static_cast<int>(state.range(0));
  SeriesControl ctrl;
  ctrl.abs_tol = 1e-10;
  ctrl.max_terms = 600;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_euler_multisum({3, r, Rational(1), q, ctrl}));
  }
}
BENCHMARK(BM_MultisumFloat)->Arg(1)->Arg(2)->Arg(3);

void BM_ZetaSingleSum(benchmark::State& state) {
  QBase q = QBase::floating({0.5, 0.0});
  SeriesControl ctrl;
  ctrl.abs_tol = 1e-12;
  ctrl.max_terms = 2000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        zeta_single_sum({{2.0, 0.5}, Rational(1), 2, q, ctrl}));
  }
}
BENCHMARK(BM_ZetaSingleSum);

void BM_ClosedExact(benchmark::State& state) {
  QBase q = QBase::exact(Rational(1, 2));
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_euler_closed({n, 3, Rational(2), q, {}}));
  }
}
BENCHMARK(BM_ClosedExact)->Arg(3)->Arg(5)->Arg(8);

void BM_PolynomialSymmetryExact(benchmark::State& state) {
  QBase q = QBase::exact(Rational(1, 2));
  int n = static_cast<int>(state.range(0));
  auto p = SymmetryParams::for_index(5, 7, 2, Rational(1), n, q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polynomial_symmetry_report(p));
  }
}
BENCHMARK(BM_PolynomialSymmetryExact)->Arg(2)->Arg(4);

void BM_SSumCollapsedVsDirect(benchmark::State& state) {
  QBase q = QBase::exact(Rational(1, 2)).rebased(Rational(3));
  bool direct = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(direct ? s_sum_direct(4, 2, 3, 5, q)
                                    : s_sum(4, 2, 3, 5, q));
  }
}
BENCHMARK(BM_SSumCollapsedVsDirect)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
