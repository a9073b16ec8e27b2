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

#ifndef CINV_MIN_POLY_HPP
#define CINV_MIN_POLY_HPP

#include "cinv/matrix.hpp"
#include "cinv/poly.hpp"

namespace cinv {

/// Monic minimal polynomial of a square matrix: the first linear dependence
/// among vec(I), vec(A), vec(A^2), ... found by exact elimination.
Poly min_poly(const Matrix& a);

}  // namespace cinv

#endif  // CINV_MIN_POLY_HPP
