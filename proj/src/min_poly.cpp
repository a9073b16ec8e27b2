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

#include "cinv/min_poly.hpp"

namespace cinv {

Poly min_poly(const Matrix& a) {
    const std::size_t n = a.dim();
    const std::size_t n2 = n * n;

    // Krylov columns vec(A^0) .. vec(A^{k-1}); the degree never exceeds n.
    std::vector<Matrix> powers{Matrix::identity(n)};
    for (std::size_t k = 1;; ++k) {
        powers.push_back(powers.back() * a);
        Matrix krylov(n2, k);
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t r = 0;
            for (const auto& x : powers[j].entries()) krylov(r++, j) = x;
        }
        LinearSolution s = solve_linear(krylov, vectorize(powers.back()));
        if (!s.consistent()) continue;

        // A^k = sum c_j A^j  =>  m(X) = X^k - sum c_j X^j
        std::vector<Rational> coeffs(k + 1);
        for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*s.solution)(j, 0);
        coeffs[k] = 1;
        return Poly(std::move(coeffs));
    }
}

}  // namespace cinv
