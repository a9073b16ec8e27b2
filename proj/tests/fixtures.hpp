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

#ifndef CINV_TESTS_FIXTURES_HPP
#define CINV_TESTS_FIXTURES_HPP

#include <string>

#include "cinv/matrix.hpp"
#include "cinv/rational.hpp"

namespace cinv::test {

inline Rational q(long n, long d = 1) { return frac(n, d); }

/// 4x4 worked example: min poly X^2 (X - 2)(X + 2), index 2, rank 3.
inline Matrix example_a() {
    return Matrix{{1, 1, 1, 0}, {1, 1, 1, -1}, {0, 0, -1, 1}, {0, 0, 1, -1}};
}

/// Geometric part G(k) of (A^k), written out entrywise in terms of 2^k and
/// (-1)^k. A^k = G(k) for k >= 2. Works for negative k as well, which gives
/// the "k -> -k" oracle for the complete inverse.
inline Matrix example_geometric(long k) {
    const Rational t = pow(Rational(2), k);
    const Rational s = pow(Rational(-1), k);
    return Matrix{{t / 2, t / 2, t * (-s + 5) / 16, t * (s - 1) / 16},
                  {t / 2, t / 2, q(5, 16) * t * (-s + 1), t * (5 * s - 1) / 16},
                  {0, 0, s * t / 2, -s * t / 2},
                  {0, 0, -s * t / 2, s * t / 2}};
}

/// Oracle for A_c^k: G(-k) plus the impulse corrections I - G(0) at k = 0
/// and A - G(1) at k = 1.
inline Matrix example_complete_power(long k) {
    Matrix out = example_geometric(-k);
    if (k == 0) out += Matrix::identity(4) - example_geometric(0);
    if (k == 1) out += example_a() - example_geometric(1);
    return out;
}

/// W coefficient of 2^k in the closed form.
inline Matrix example_w_plus() {
    return Matrix{{q(1, 2), q(1, 2), q(5, 16), q(-1, 16)}, {q(1, 2), q(1, 2), q(5, 16), q(-1, 16)}, {0, 0, 0, 0}, {0, 0, 0, 0}};
}

/// W coefficient of (-2)^k in the closed form.
inline Matrix example_w_minus() {
    return Matrix{{0, 0, q(-1, 16), q(1, 16)}, {0, 0, q(-5, 16), q(5, 16)}, {0, 0, q(1, 2), q(-1, 2)}, {0, 0, q(-1, 2), q(1, 2)}};
}

/// Complete inverse of example_a() (sympy: A + A_d - A^2 A_d).
inline Matrix example_complete() {
    return Matrix{{q(1, 4), q(1, 4), q(7, 16), q(3, 16)},
                  {q(1, 4), q(1, 4), q(1, 16), q(-7, 16)},
                  {0, 0, q(-1, 4), q(1, 4)},
                  {0, 0, q(1, 4), q(-1, 4)}};
}

/// Reference matrix checked by the acceptance suite; differs
/// from example_complete() in entry (1,4): 19/16 instead of 3/16.
inline Matrix example_complete_as_printed() {
    return Matrix{{q(1, 4), q(1, 4), q(7, 16), q(19, 16)},
                  {q(1, 4), q(1, 4), q(1, 16), q(-7, 16)},
                  {0, 0, q(-1, 4), q(1, 4)},
                  {0, 0, q(1, 4), q(-1, 4)}};
}

/// Drazin inverse of example_a() (sympy: W_+ / 2 - W_- / 2).
inline Matrix example_drazin() {
    return Matrix{{q(1, 4), q(1, 4), q(3, 16), q(-1, 16)},
                  {q(1, 4), q(1, 4), q(5, 16), q(-3, 16)},
                  {0, 0, q(-1, 4), q(1, 4)},
                  {0, 0, q(1, 4), q(-1, 4)}};
}

inline Matrix nilpotent2() { return Matrix{{0, 1}, {0, 0}}; }
inline Matrix rotation() { return Matrix{{0, -1}, {1, 0}}; }
inline Matrix jordan_one() { return Matrix{{1, 1}, {0, 1}}; }

}  // namespace cinv::test

#endif  // CINV_TESTS_FIXTURES_HPP
