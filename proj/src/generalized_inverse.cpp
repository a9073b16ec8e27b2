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

#include "cinv/generalized_inverse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "cinv/errors.hpp"
#include "cinv/min_poly.hpp"

namespace cinv {

std::size_t index(const Matrix& a) {
    const std::size_t n = a.dim();
    std::size_t prev_rank = n;
    Matrix power = Matrix::identity(n);
    for (std::size_t p = 0;; ++p) {
        power = power * a;
        const std::size_t r = rank(power);
        if (r == prev_rank) return p;
        prev_rank = r;
    }
}

Matrix drazin_formula(const Matrix& a) {
    const std::size_t n = a.dim();
    const Poly m = min_poly(a);
    const std::size_t p = index(a);
    const std::size_t q = static_cast<std::size_t>(m.degree());

    const Rational a_p = m.coeff(p);
    if (a_p == 0) throw std::logic_error("index does not match the order of 0 in the minimal polynomial");
    if (q == p) return Matrix::zero(n);  // nilpotent

    // inner = A^{q-p-1} + a_{q-1} A^{q-p-2} + ... + a_{p+1} I, by Horner from the top.
    Matrix inner = Matrix::zero(n);
    for (std::size_t i = q; i > p; --i) {
        inner = inner * a;
        for (std::size_t d = 0; d < n; ++d) inner(d, d) += m.coeff(i);
    }

    Rational scale = pow(a_p, -static_cast<long>(p) - 1);
    if ((p + 1) % 2 == 1) scale = -scale;
    return scale * (pow(a, static_cast<unsigned>(p)) * pow(inner, static_cast<unsigned>(p + 1)));
}

Matrix drazin_euclid(const Matrix& a) {
    const Poly m = min_poly(a);
    const std::size_t p = index(a);
    const PolyDivision split = divmod(m, Poly::monomial(Rational(1), p));
    if (!split.remainder.is_zero()) throw std::logic_error("X^index does not divide the minimal polynomial");
    const Poly h = mod_inverse(Poly::x(), split.quotient);
    return pow(a, static_cast<unsigned>(p)) * pow(h(a), static_cast<unsigned>(p + 1));
}

Matrix complete_inverse_from(const Matrix& a, const Matrix& drazin_inverse) {
    return a + drazin_inverse - a * a * drazin_inverse;
}

Matrix complete_inverse(const Matrix& a) { return complete_inverse_from(a, drazin_formula(a)); }

CoreNilpotentSplit core_nilpotent(const Matrix& a) {
    CoreNilpotentSplit out;
    out.core = a * a * drazin_formula(a);
    out.nilpotent = a - out.core;
    out.index = index(a);
    return out;
}

Matrix spectral_projection_zero(const Matrix& a) { return Matrix::identity(a.dim()) - a * drazin_formula(a); }

std::string label(Equation e) {
    switch (e) {
        case Equation::OneN: return "1";
        case Equation::Three: return "3";
        case Equation::Four: return "4";
        case Equation::Five: return "5";
    }
    return "?";
}

UInverseSpec::UInverseSpec(unsigned n, const std::array<bool, 4>& requested) : n_(n), requested_(requested) {
    if (n_ == 0) throw std::invalid_argument("equation (1^n) needs n >= 1");
    if (std::none_of(requested_.begin(), requested_.end(), [](bool b) { return b; }))
        throw std::invalid_argument("empty equation set");
}

UInverseSpec::UInverseSpec(unsigned n, std::initializer_list<Equation> equations)
    : UInverseSpec(n, [&] {
          std::array<bool, 4> r{};
          for (Equation e : equations) r[static_cast<std::size_t>(e)] = true;
          return r;
      }()) {}

UInverseSpec UInverseSpec::for_index(std::size_t p, std::initializer_list<Equation> equations) {
    return UInverseSpec(static_cast<unsigned>(std::max<std::size_t>(p, 1)), equations);
}

UInverseSpec UInverseSpec::parse(unsigned n, const std::string& equations) {
    std::array<bool, 4> r{};
    std::stringstream ss(equations);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        if (tok == "1" || tok == "1n" || tok == "1^n")
            r[0] = true;
        else if (tok == "3")
            r[1] = true;
        else if (tok == "4")
            r[2] = true;
        else if (tok == "5")
            r[3] = true;
        else
            throw ParseError("unknown equation '" + tok + "' (expected 1, 3, 4 or 5)");
    }
    if (std::none_of(r.begin(), r.end(), [](bool b) { return b; })) throw ParseError("empty equation list");
    if (n == 0) throw ParseError("n must be >= 1");
    return UInverseSpec(n, r);
}

InverseReport u_inverse_check(const Matrix& a, const Matrix& x, const UInverseSpec& spec) {
    if (a.dim() != x.dim()) throw DimensionError("u_inverse_check: orders differ");
    const Matrix ax = a * x;
    const Matrix xa = x * a;

    InverseReport report;
    if (spec.requests(Equation::OneN)) {
        const Matrix an = pow(a, spec.n());
        report.results[0] = an * xa == an;
    }
    if (spec.requests(Equation::Three)) report.results[1] = xa * x == x;
    if (spec.requests(Equation::Four)) report.results[2] = xa * x - ax * a == x - a;
    if (spec.requests(Equation::Five)) report.results[3] = ax == xa;

    report.verdict = std::all_of(report.results.begin(), report.results.end(),
                                 [](const std::optional<bool>& r) { return r.value_or(true); });
    return report;
}

std::optional<Poly> is_polynomial_in(const Matrix& target, const Matrix& generator) {
    if (target.dim() != generator.dim()) throw DimensionError("is_polynomial_in: orders differ");
    const std::size_t n = generator.dim();
    const std::size_t d = static_cast<std::size_t>(min_poly(generator).degree());

    Matrix krylov(n * n, d);
    Matrix power = Matrix::identity(n);
    for (std::size_t j = 0; j < d; ++j) {
        std::size_t r = 0;
        for (const auto& v : power.entries()) krylov(r++, j) = v;
        power = power * generator;
    }
    LinearSolution s = solve_linear(krylov, vectorize(target));
    if (!s.consistent()) return std::nullopt;

    std::vector<Rational> coeffs(d);
    for (std::size_t j = 0; j < d; ++j) coeffs[j] = (*s.solution)(j, 0);
    return Poly(std::move(coeffs));
}

}  // namespace cinv
