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

#ifndef CINV_GENERALIZED_INVERSE_HPP
#define CINV_GENERALIZED_INVERSE_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>

#include "cinv/matrix.hpp"
#include "cinv/poly.hpp"

namespace cinv {

/// Smallest p >= 0 with rank(A^{p+1}) = rank(A^p). Zero exactly for
/// invertible A; never exceeds dim.
std::size_t index(const Matrix& a);

/// Drazin inverse read directly off the minimal polynomial
/// m(X) = X^q + a_{q-1} X^{q-1} + ... + a_p X^p with a_p != 0:
///
///   A_d = (-1)^{p+1} a_p^{-p-1} A^p (A^{q-p-1} + a_{q-1} A^{q-p-2} + ... + a_{p+1} I)^{p+1}
///
/// For p = 0 this is the ordinary inverse, for nilpotent A it is 0.
Matrix drazin_formula(const Matrix& a);

/// Independent route: g = m / X^p, h = X^{-1} mod g, A_d = A^p h(A)^{p+1}.
Matrix drazin_euclid(const Matrix& a);

/// Default Drazin inverse (the formula route).
inline Matrix drazin(const Matrix& a) { return drazin_formula(a); }

/// Complete inverse A_c = A + A_d - A^2 A_d, the unique {1^p, 4, 5}-inverse.
Matrix complete_inverse(const Matrix& a);

/// Same construction with a caller-supplied Drazin inverse.
Matrix complete_inverse_from(const Matrix& a, const Matrix& drazin_inverse);

/// A = core + nilpotent with core = A^2 A_d.
struct CoreNilpotentSplit {
    Matrix core;
    Matrix nilpotent;
    std::size_t index = 0;
};

CoreNilpotentSplit core_nilpotent(const Matrix& a);

/// pi_0 = I - A A_d, the spectral idempotent at eigenvalue 0.
Matrix spectral_projection_zero(const Matrix& a);

// ---------------------------------------------------------------------------
// U-inverse equations
//
//   (1^n)  a^n x a = a^n
//   (3)    x a x = x
//   (4)    x a x - a x a = x - a
//   (5)    a x = x a
//
// There is no equation (2) in this system; the labels are kept as is.
// ---------------------------------------------------------------------------

enum class Equation { OneN = 0, Three = 1, Four = 2, Five = 3 };

inline constexpr std::array<Equation, 4> kAllEquations{Equation::OneN, Equation::Three, Equation::Four,
                                                       Equation::Five};

/// "1", "3", "4", "5"
std::string label(Equation e);

/// Which equations are requested, and the exponent used by (1^n).
class UInverseSpec {
   public:
    /// Throws std::invalid_argument if n == 0 or no equation is requested.
    UInverseSpec(unsigned n, std::initializer_list<Equation> equations);
    UInverseSpec(unsigned n, const std::array<bool, 4>& requested);

    /// Spec for a matrix of index p: (1^n) with n = max(p, 1).
    static UInverseSpec for_index(std::size_t p, std::initializer_list<Equation> equations);

    /// Parses "1,4,5" (also "1n", "1^n", "3", ...). Throws ParseError.
    static UInverseSpec parse(unsigned n, const std::string& equations);

    unsigned n() const noexcept { return n_; }
    bool requests(Equation e) const noexcept { return requested_[static_cast<std::size_t>(e)]; }

   private:
    unsigned n_;
    std::array<bool, 4> requested_{};
};

struct InverseReport {
    std::array<std::optional<bool>, 4> results{};  ///< unset for equations not requested
    bool verdict = false;                          ///< conjunction of the requested results

    std::optional<bool> result(Equation e) const { return results[static_cast<std::size_t>(e)]; }
};

/// Evaluates every requested equation exactly. Throws DimensionError when
/// a and x are not square matrices of equal order.
InverseReport u_inverse_check(const Matrix& a, const Matrix& x, const UInverseSpec& spec);

/// Coefficients c with target = sum c_i generator^i, i < deg(min_poly(generator)),
/// trailing zeros stripped; nullopt when target is outside the algebra
/// generated by generator.
std::optional<Poly> is_polynomial_in(const Matrix& target, const Matrix& generator);

}  // namespace cinv

#endif  // CINV_GENERALIZED_INVERSE_HPP
