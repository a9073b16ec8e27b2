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

#ifndef CINV_POLY_HPP
#define CINV_POLY_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cinv/matrix.hpp"
#include "cinv/rational.hpp"

namespace cinv {

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// Canonical: the highest stored coefficient is nonzero; zero is the empty list.
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<Rational> ascending);
    Poly(std::initializer_list<Rational> ascending) : Poly(std::vector<Rational>(ascending)) {}

    static Poly constant(const Rational& c) { return Poly({c}); }
    /// c * X^degree
    static Poly monomial(const Rational& c, std::size_t degree);
    static Poly x() { return monomial(Rational(1), 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree, -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of X^i, zero beyond the degree.
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const;
    /// Multiplicity of the root 0, i.e. the largest m with X^m | p. Zero polynomial -> 0.
    std::size_t valuation() const noexcept;

    Poly monic() const;

    Rational operator()(const Rational& x) const;
    /// Horner evaluation at a square matrix.
    Matrix operator()(const Matrix& a) const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

   private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
PolyDivision divmod(const Poly& p, const Poly& q);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
Poly derivative(const Poly& p);

/// h with f*h = 1 (mod g) and deg h < deg g, by extended Euclid.
/// Throws std::domain_error when gcd(f, g) != 1 or g == 0.
Poly mod_inverse(const Poly& f, const Poly& g);

/// Rational roots of a nonzero polynomial with multiplicities.
struct RootFactorization {
    std::vector<std::pair<Rational, unsigned>> roots;  ///< ascending by root
    bool splits = false;                               ///< p = lc * prod (X - r)^m
    Poly cofactor;                                     ///< p / prod (X - r)^m, constant iff splits
};

/// Candidates come from the rational-root theorem applied to the primitive
/// integer multiple of p; each is divided out repeatedly. Throws
/// std::domain_error for the zero polynomial.
RootFactorization rational_roots(const Poly& p);

/// "X^4 - 4*X^2" style rendering; "0" for the zero polynomial.
std::string to_string(const Poly& p);

}  // namespace cinv

#endif  // CINV_POLY_HPP
