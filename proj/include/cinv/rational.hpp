/*
   Copyright 2026 The cinv Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CINV_RATIONAL_HPP
#define CINV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cinv {

/// Exact rational scalar. GMP keeps every value canonical: gcd(num, den) = 1,
/// den > 0, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical fraction num/den. Throws std::domain_error when den == 0.
Rational frac(const Integer& num, const Integer& den);
Rational frac(long num, long den);

/// "p/q", or "p" when q == 1. The output is the canonical text form.
std::string to_string(const Rational& r);

/// Parses an integer literal or "p/q" with optional leading sign. Accepts the
/// Unicode minus sign U+2212 besides '-'. Throws ParseError.
Rational parse_rational(std::string_view text);

/// base^exp for any integer exponent; a negative exponent requires base != 0.
Rational pow(const Rational& base, long exp);

}  // namespace cinv

#endif  // CINV_RATIONAL_HPP
