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

#ifndef CINV_IO_HPP
#define CINV_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "cinv/generalized_inverse.hpp"
#include "cinv/matrix.hpp"
#include "cinv/poly.hpp"
#include "cinv/sequence.hpp"
#include "json.hpp"

namespace cinv::io {

using json = nlohmann::json;

/// Square matrix given as rows of entries. Every entry is an integer literal
/// or "p/q" string; plain JSON integers are accepted too.
struct MatrixDocument {
    Matrix matrix;
    std::optional<std::string> label;
};

/// Rows array -> Matrix. Throws ParseError on ragged, empty, non-square input
/// or malformed entries.
Matrix matrix_from_json(const json& rows);

/// Accepts {"matrix": rows, "label": "..."} or a bare rows array.
MatrixDocument parse_matrix_document(const json& doc);
MatrixDocument read_matrix_document(std::istream& in);

/// Rows of canonical rational strings.
json to_json(const Matrix& m);

/// {"dim": n, "impulse": [{"i": i, "V": rows}, ...], "geometric": [{"lambda": "p/q", "W": rows}, ...]}
/// Terms appear in canonical order (positions, then ratios ascending).
json to_json(const MatrixSequence& u);
MatrixSequence sequence_from_json(const json& doc);

/// {"1": bool, ..., "verdict": bool} with only the requested equations.
json to_json(const InverseReport& report);

/// Ascending coefficient strings plus a text rendering.
json to_json(const Poly& p);

/// "fnv1a64:<16 hex digits>" over the canonical text form of the matrix.
std::string digest(const Matrix& m);

}  // namespace cinv::io

#endif  // CINV_IO_HPP
