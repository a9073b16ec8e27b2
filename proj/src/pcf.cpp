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

#include "cinv/pcf.hpp"

#include <vector>

#include "cinv/min_poly.hpp"

namespace cinv {

EligibilityError::EligibilityError(Kind kind, Poly factor)
    : std::runtime_error((kind == Kind::NotSplit ? "NOT_SPLIT: factor " : "NOT_SQUARE_FREE: repeated factor ") +
                         to_string(factor)),
      kind_(kind),
      factor_(std::move(factor)) {}

std::string EligibilityError::code() const { return kind_ == Kind::NotSplit ? "NOT_SPLIT" : "NOT_SQUARE_FREE"; }

MatrixSequence pcf(const Matrix& a) {
    const std::size_t n = a.dim();
    const Poly m = min_poly(a);
    const std::size_t t = m.valuation();
    const Poly g(std::vector<Rational>(m.coeffs().begin() + static_cast<long>(t), m.coeffs().end()));

    if (Poly repeated = gcd(g, derivative(g)); repeated.degree() > 0)
        throw EligibilityError(EligibilityError::Kind::NotSquareFree, repeated);
    const RootFactorization roots = rational_roots(g);
    if (!roots.splits) throw EligibilityError(EligibilityError::Kind::NotSplit, roots.cofactor);

    std::vector<Rational> ratios;
    for (const auto& [r, mult] : roots.roots) ratios.push_back(r);
    const std::size_t count = ratios.size();

    std::vector<Matrix> powers{Matrix::identity(n)};
    while (powers.size() < t + count) powers.push_back(powers.back() * a);

    // sum_j lambda_j^k W_j = A^k for k = t .. t+count-1, one column per entry of W.
    Matrix vandermonde(count, count);
    Matrix rhs(count, n * n);
    for (std::size_t r = 0; r < count; ++r) {
        const std::size_t k = t + r;
        for (std::size_t j = 0; j < count; ++j) vandermonde(r, j) = pow(ratios[j], static_cast<long>(k));
        std::size_t c = 0;
        for (const auto& x : powers[k].entries()) rhs(r, c++) = x;
    }
    const LinearSolution solved = solve_linear(vandermonde, rhs);
    if (solved.rank != count) throw std::logic_error("pcf: singular Vandermonde system");

    MatrixSequence out = matrix_sequence(n);
    std::vector<Matrix> w(count, Matrix::zero(n));
    for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t c = 0; c < n * n; ++c) w[j](c / n, c % n) = (*solved.solution)(j, c);
        out.add_geometric(ratios[j], w[j]);
    }
    for (std::size_t i = 0; i < t; ++i) {
        Matrix v = powers[i];
        for (std::size_t j = 0; j < count; ++j) v -= w[j] * pow(ratios[j], static_cast<long>(i));
        out.add_impulse(i, v);
    }
    return out;
}

MatrixSequence theta_psi(const MatrixSequence& u, PsiMode mode) {
    MatrixSequence out(u.zero_coeff());
    if (mode == PsiMode::Identity)
        for (const auto& [i, v] : u.impulse_terms()) out.add_impulse(i, v);
    for (const auto& [ratio, w] : u.geometric_terms()) out.add_geometric(1 / ratio, w);
    return out;
}

MatrixSequence drazin_seq(const Matrix& a) {
    const MatrixSequence closed = pcf(a);
    Matrix pi0 = Matrix::identity(a.dim());
    for (const auto& [ratio, w] : closed.geometric_terms()) pi0 -= w;
    MatrixSequence out = theta_psi(closed, PsiMode::Zero);
    out.add_impulse(0, pi0);
    return out;
}

MatrixSequence complete_seq(const Matrix& a) { return theta_psi(pcf(a), PsiMode::Identity); }

InverseReport seq_u_inverse_check(const MatrixSequence& u, const MatrixSequence& s, const UInverseSpec& spec,
                                  std::size_t horizon) {
    if (!(u.zero_coeff() == s.zero_coeff())) throw DimensionError("seq_u_inverse_check: orders differ");
    InverseReport out;
    for (Equation e : kAllEquations)
        if (spec.requests(e)) out.results[static_cast<std::size_t>(e)] = true;
    for (std::size_t k = 0; k <= horizon; ++k) {
        const InverseReport at = u_inverse_check(u(k), s(k), spec);
        for (std::size_t e = 0; e < out.results.size(); ++e)
            if (out.results[e]) out.results[e] = *out.results[e] && *at.results[e];
    }
    out.verdict = true;
    for (const auto& r : out.results) out.verdict = out.verdict && r.value_or(true);
    return out;
}

}  // namespace cinv
