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

#include "cinv/io.hpp"

#include <cstdint>
#include <cstdio>
#include <istream>

#include "cinv/errors.hpp"

namespace cinv::io {

namespace {

Rational entry_from_json(const json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
    throw ParseError("matrix entry must be an integer or a \"p/q\" string, got " + v.dump());
}

}  // namespace

Matrix matrix_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty()) throw ParseError("matrix must be a nonempty array of rows");
    const std::size_t n = rows.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array()) throw ParseError("matrix row " + std::to_string(i) + " is not an array");
        if (row.size() != n)
            throw ParseError("matrix must be square: row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(n));
        for (std::size_t j = 0; j < n; ++j) m(i, j) = entry_from_json(row[j]);
    }
    return m;
}

MatrixDocument parse_matrix_document(const json& doc) {
    MatrixDocument out;
    if (doc.is_array()) {
        out.matrix = matrix_from_json(doc);
        return out;
    }
    if (!doc.is_object() || !doc.contains("matrix")) throw ParseError("expected an object with a \"matrix\" field");
    out.matrix = matrix_from_json(doc.at("matrix"));
    if (auto it = doc.find("label"); it != doc.end()) {
        if (!it->is_string()) throw ParseError("\"label\" must be a string");
        out.label = it->get<std::string>();
    }
    return out;
}

MatrixDocument read_matrix_document(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_matrix_document(doc);
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (const auto& x : m.row(i)) row.push_back(to_string(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const MatrixSequence& u) {
    json impulse = json::array();
    for (const auto& [i, v] : u.impulse_terms()) impulse.push_back({{"i", i}, {"V", to_json(v)}});
    json geometric = json::array();
    for (const auto& [ratio, w] : u.geometric_terms())
        geometric.push_back({{"lambda", to_string(ratio)}, {"W", to_json(w)}});
    return {{"dim", u.zero_coeff().rows()}, {"impulse", impulse}, {"geometric", geometric}};
}

MatrixSequence sequence_from_json(const json& doc) {
    try {
        const std::size_t n = doc.at("dim").get<std::size_t>();
        MatrixSequence out = matrix_sequence(n);
        auto checked = [n](const json& rows) {
            Matrix m = matrix_from_json(rows);
            if (m.dim() != n) throw ParseError("sequence coefficient has the wrong order");
            return m;
        };
        for (const json& t : doc.at("impulse")) out.add_impulse(t.at("i").get<std::size_t>(), checked(t.at("V")));
        for (const json& t : doc.at("geometric")) {
            const Rational ratio = parse_rational(t.at("lambda").get<std::string>());
            if (ratio == 0) throw ParseError("geometric ratio must be nonzero");
            out.add_geometric(ratio, checked(t.at("W")));
        }
        return out;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed sequence document: ") + e.what());
    }
}

json to_json(const InverseReport& report) {
    json out = json::object();
    for (Equation e : kAllEquations)
        if (auto r = report.result(e)) out[label(e)] = *r;
    out["verdict"] = report.verdict;
    return out;
}

json to_json(const Poly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return {{"coefficients", coeffs}, {"text", to_string(p)}};
}

std::string digest(const Matrix& m) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_json(m).dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

}  // namespace cinv::io
