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

#include "cinv/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cinv {

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { normalize(); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

std::size_t Poly::valuation() const noexcept {
    std::size_t v = 0;
    while (v < coeffs_.size() && coeffs_[v] == 0) ++v;
    return v == coeffs_.size() ? 0 : v;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly out = *this;
    Rational inv = 1 / leading();
    return out *= inv;
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Matrix Poly::operator()(const Matrix& a) const {
    const std::size_t n = a.dim();
    Matrix acc = Matrix::zero(n);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * a;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(out));
}

PolyDivision divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = p.coeffs();
    const std::size_t dq = static_cast<std::size_t>(q.degree());
    if (rem.size() <= dq) return {Poly(), p};

    std::vector<Rational> quot(rem.size() - dq);
    const Rational inv_lead = 1 / q.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational c = rem[k + dq] * inv_lead;
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= c * q.coeffs()[j];
    }
    rem.resize(dq);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly derivative(const Poly& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> out(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) out[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
    return Poly(std::move(out));
}

Poly mod_inverse(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("mod_inverse: zero modulus");
    // Invariant: r0 = s0 * f (mod g), r1 = s1 * f (mod g).
    Poly r0 = g, r1 = divmod(f, g).remainder;
    Poly s0, s1 = Poly::constant(1);
    while (!r1.is_zero()) {
        PolyDivision qr = divmod(r0, r1);
        Poly s2 = s0 - qr.quotient * s1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw std::domain_error("mod_inverse: " + to_string(f) + " and " + to_string(g) + " are not coprime");
    Poly h = s0 * (1 / r0.leading());
    return divmod(h, g).remainder;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        Integer other = n / d;
        if (other != d) large.push_back(other);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

RootFactorization rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
    RootFactorization out;
    Poly rest = p;

    if (std::size_t z = rest.valuation(); z > 0) {
        std::vector<Rational> shifted(rest.coeffs().begin() + static_cast<long>(z), rest.coeffs().end());
        rest = Poly(std::move(shifted));
        out.roots.emplace_back(Rational(0), static_cast<unsigned>(z));
    }

    if (rest.degree() > 0) {
        // Primitive integer multiple: scale by the lcm of denominators.
        Integer scale = 1;
        for (const auto& c : rest.coeffs()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
        Integer a0 = Rational(rest.coeffs().front() * scale).get_num();
        Integer an = Rational(rest.leading() * scale).get_num();

        std::vector<Rational> candidates;
        for (const Integer& num : positive_divisors(a0))
            for (const Integer& den : positive_divisors(an)) {
                candidates.push_back(frac(num, den));
                candidates.push_back(-frac(num, den));
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        for (const Rational& r : candidates) {
            unsigned mult = 0;
            const Poly linear({-r, Rational(1)});
            while (rest.degree() > 0 && rest(r) == 0) {
                rest = divmod(rest, linear).quotient;
                ++mult;
            }
            if (mult > 0) out.roots.emplace_back(r, mult);
        }
    }

    std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.splits = rest.degree() == 0;
    out.cofactor = std::move(rest);
    return out;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        const Rational& c = p.coeffs()[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        const bool unit = mag == 1 && i > 0;
        if (!unit) out += to_string(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += "X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace cinv
