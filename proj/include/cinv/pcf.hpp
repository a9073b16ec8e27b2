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

#ifndef CINV_PCF_HPP
#define CINV_PCF_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "cinv/generalized_inverse.hpp"
#include "cinv/matrix.hpp"
#include "cinv/poly.hpp"
#include "cinv/sequence.hpp"

namespace cinv {

/// Raised when (A^k) has no closed form as impulses plus rational geometric
/// terms. `factor()` is the offending polynomial factor.
class EligibilityError : public std::runtime_error {
   public:
    enum class Kind { NotSplit, NotSquareFree };

    EligibilityError(Kind kind, Poly factor);

    Kind kind() const noexcept { return kind_; }
    const Poly& factor() const noexcept { return factor_; }
    /// "NOT_SPLIT" / "NOT_SQUARE_FREE"
    std::string code() const;

   private:
    Kind kind_;
    Poly factor_;
};

/// Closed form of the power sequence (A^k)_{k>=0}:
///
///   A^k = sum_{i<t} V_i [k == i] + sum_j W_j lambda_j^k
///
/// where min_poly(A) = X^t g(X) and lambda_j are the roots of g. Requires g
/// square-free (else NotSquareFree) with all roots rational (else NotSplit).
/// The W_j solve the Vandermonde system at k = t .. t+m-1.
MatrixSequence pcf(const Matrix& a);

/// How the impulse part is mapped by theta_psi.
enum class PsiMode { Zero, Identity };

/// Inverts every geometric ratio (lambda -> 1/lambda) and maps the impulse
/// part by Psi: dropped for Zero, kept for Identity.
MatrixSequence theta_psi(const MatrixSequence& u, PsiMode mode);

/// Drazin inverse of the power sequence: theta_psi(pcf(A), Zero) + 0_0 pi_0,
/// with pi_0 = I - sum_j W_j read off the closed form.
MatrixSequence drazin_seq(const Matrix& a);

/// Complete inverse of the power sequence, theta_psi(pcf(A), Identity): the
/// closed form of A with k replaced by -k in the geometric terms.
MatrixSequence complete_seq(const Matrix& a);

inline constexpr std::size_t kDefaultHorizon = 12;

/// Checks the requested equations for s_k against u_k at every k in 0..horizon.
InverseReport seq_u_inverse_check(const MatrixSequence& u, const MatrixSequence& s, const UInverseSpec& spec,
                                  std::size_t horizon = kDefaultHorizon);

}  // namespace cinv

#endif  // CINV_PCF_HPP
