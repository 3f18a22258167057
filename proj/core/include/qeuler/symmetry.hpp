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

/// @file symmetry.hpp
/// @brief Symmetric identities between odd parameters a and b: the zeta-level
/// identity, its polynomial-level specialization, and the convolution form
/// built from S-sums. Every verifier computes both sides through one shared
/// side function, so reports are exactly symmetric under swapping a and b.

#pragma once

#include <complex>
#include <vector>

#include "qeuler/report.hpp"
#include "qeuler/scalar.hpp"
#include "qeuler/series.hpp"

namespace qeuler {

/// Parameter tuple (a, b, r, x, q) with the standing parity hypothesis
/// a = b = 1 (mod 2) enforced at construction, plus either a complex
/// exponent s (zeta level) or an index n (polynomial/convolution level).
class SymmetryParams {
 public:
  /// Zeta-level parameters (float backend; general complex s).
  static SymmetryParams for_exponent(int a, int b, int r, const Rational& x,
                                     std::complex<double> s, QBase base,
                                     SeriesControl ctrl = {},
                                     double check_tol = 1e-9);
  /// Index-level parameters (either backend).
  static SymmetryParams for_index(int a, int b, int r, const Rational& x,
                                  int n, QBase base, SeriesControl ctrl = {},
                                  double check_tol = 1e-9);
  /// Experimentation-only factories that skip the parity validation. Nothing
  /// is claimed about identities with even parameters.
  static SymmetryParams for_exponent_unchecked(int a, int b, int r,
                                               const Rational& x,
                                               std::complex<double> s,
                                               QBase base,
                                               SeriesControl ctrl = {},
                                               double check_tol = 1e-9);
  static SymmetryParams for_index_unchecked(int a, int b, int r,
                                            const Rational& x, int n,
                                            QBase base, SeriesControl ctrl = {},
                                            double check_tol = 1e-9);

  int a() const { return a_; }
  int b() const { return b_; }
  int r() const { return r_; }
  const Rational& x() const { return x_; }
  bool has_index() const { return has_index_; }
  int n() const;
  std::complex<double> s() const;
  const QBase& base() const { return base_; }
  const SeriesControl& ctrl() const { return ctrl_; }
  double check_tol() const { return check_tol_; }

  /// Parameter echo for reports.
  std::vector<std::pair<std::string, std::string>> describe() const;

 private:
  SymmetryParams() = default;

  int a_ = 1, b_ = 1, r_ = 1;
  Rational x_{0};
  bool has_index_ = false;
  int n_ = 0;
  std::complex<double> s_{0.0, 0.0};
  QBase base_ = QBase::floating({0.5, 0.0});
  SeriesControl ctrl_;
  double check_tol_ = 1e-9;
};

/// S_{n,i}(a) at base q_eff: the finite alternating r-fold sum
///   sum_{j_1..j_r in [0,a)} (-1)^{|j|} q_eff^{(n-i+1)|j|} [|j|]_{q_eff}^i
/// with the 0^0 = 1 convention. Production route groups the j-tuples by
/// total with composition counts (r(a-1)+1 terms instead of a^r).
Scalar s_sum(int n, int i, int r, int a, const QBase& q_eff);

/// Direct a^r-tuple evaluation; the oracle for the collapsed route.
Scalar s_sum_direct(int n, int i, int r, int a, const QBase& q_eff);

/// Number of tuples in [0,a)^r with each total 0..r(a-1).
std::vector<Integer> composition_counts(int r, int a);

/// One side of the zeta-level identity:
///   [2]_{q^bb}^r [bb]_q^s sum_{j in [0,aa)^r} (-1)^{|j|} q^{bb |j|}
///     zeta_{q^aa, r}(s, bb x + (bb/aa)|j|).
/// The report's lhs is side(a, b), its rhs side(b, a).
Scalar zeta_symmetry_side(int aa, int bb, const SymmetryParams& p);
IdentityReport zeta_symmetry_report(const SymmetryParams& p);

/// One side of the polynomial-level identity:
///   [2]_{q^bb}^r [aa]_q^n sum_{j in [0,aa)^r} (-1)^{|j|} q^{bb |j|}
///     E_{n, q^aa}^{(r)}(bb x + (bb/aa)|j|).
Scalar polynomial_symmetry_side(int aa, int bb, const SymmetryParams& p);
IdentityReport polynomial_symmetry_report(const SymmetryParams& p);

/// One side of the convolution form:
///   [2]_{q^bb}^r sum_{i=0}^{n} binom(n,i) [aa]_q^{n-i} [bb]_q^{i}
///     E_{n-i, q^aa}^{(r)}(bb x) S_{n,i}(aa) at base q^bb.
/// Equal, side by side, to the polynomial-level identity.
Scalar convolution_symmetry_side(int aa, int bb, const SymmetryParams& p);
IdentityReport convolution_symmetry_report(const SymmetryParams& p);

}  // namespace qeuler
