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

/// @file rational.hpp
/// @brief Arbitrary-precision integers and rationals (GMP) plus the small
/// helpers the rest of the library needs on top of them.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qeuler {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

double to_double(const Rational& r);

/// Exact conversion to long; throws DomainError if r is not an integer or
/// does not fit.
long to_long_exact(const Rational& r);

/// base^e for integer e (negative allowed when base != 0).
Rational rational_pow(const Rational& base, long e);

Integer integer_pow(const Integer& base, unsigned long e);

/// binom(n, k) as an exact integer.
Integer binomial(unsigned long n, unsigned long k);

/// gcd(p1/q1, p2/q2) = gcd(p1, p2) / lcm(q1, q2); result is >= 0 and both
/// inputs divided by it are integers.
Rational rational_gcd(const Rational& a, const Rational& b);

/// Exact n-th root of a nonnegative rational, if one exists.
std::optional<Rational> exact_nth_root(const Rational& r, unsigned long n);

/// Parses "p/q", "-3", or a plain decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace qeuler
