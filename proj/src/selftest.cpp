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

#include "cinv/selftest.hpp"

#include "cinv/errors.hpp"
#include "cinv/generalized_inverse.hpp"
#include "cinv/min_poly.hpp"
#include "cinv/pcf.hpp"

namespace cinv {

namespace {

constexpr const char* kGolden = R"golden({
  "label": "4x4 index-2 example with eigenvalues 2, -2, 0, 0",
  "matrix": [["1", "1", "1", "0"], ["1", "1", "1", "-1"], ["0", "0", "-1", "1"], ["0", "0", "1", "-1"]],
  "index": 2,
  "rank": 3,
  "min_poly": ["0", "0", "-4", "0", "1"],
  "drazin": [["1/4", "1/4", "3/16", "-1/16"], ["1/4", "1/4", "5/16", "-3/16"], ["0", "0", "-1/4", "1/4"], ["0", "0", "1/4", "-1/4"]],
  "complete": [["1/4", "1/4", "7/16", "3/16"], ["1/4", "1/4", "1/16", "-7/16"], ["0", "0", "-1/4", "1/4"], ["0", "0", "1/4", "-1/4"]],
  "pcf": {
    "dim": 4,
    "impulse": [
      {"i": 0, "V": [["1/2", "-1/2", "-1/4", "0"], ["-1/2", "1/2", "0", "-1/4"], ["0", "0", "1/2", "1/2"], ["0", "0", "1/2", "1/2"]]},
      {"i": 1, "V": [["0", "0", "1/4", "1/4"], ["0", "0", "-1/4", "-1/4"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]]}
    ],
    "geometric": [
      {"lambda": "-2", "W": [["0", "0", "-1/16", "1/16"], ["0", "0", "-5/16", "5/16"], ["0", "0", "1/2", "-1/2"], ["0", "0", "-1/2", "1/2"]]},
      {"lambda": "2", "W": [["1/2", "1/2", "5/16", "-1/16"], ["1/2", "1/2", "5/16", "-1/16"], ["0", "0", "0", "0"], ["0", "0", "0", "0"]]}
    ]
  }
}
)golden";

}  // namespace

io::json default_golden() { return io::json::parse(kGolden); }

std::vector<GoldenCheck> run_golden_suite(const io::json& golden) {
    std::vector<GoldenCheck> out;
    auto check = [&out](std::string name, bool ok) { out.push_back({std::move(name), ok}); };

    Matrix a, drazin_expected, complete_expected;
    std::size_t index_expected = 0, rank_expected = 0;
    Poly min_poly_expected;
    MatrixSequence pcf_expected = matrix_sequence(1);
    try {
        a = io::matrix_from_json(golden.at("matrix"));
        index_expected = golden.at("index").get<std::size_t>();
        rank_expected = golden.at("rank").get<std::size_t>();
        std::vector<Rational> coeffs;
        for (const auto& c : golden.at("min_poly")) coeffs.push_back(parse_rational(c.get<std::string>()));
        min_poly_expected = Poly(std::move(coeffs));
        drazin_expected = io::matrix_from_json(golden.at("drazin"));
        complete_expected = io::matrix_from_json(golden.at("complete"));
        pcf_expected = io::sequence_from_json(golden.at("pcf"));
    } catch (const io::json::exception& e) {
        throw ParseError(std::string("malformed golden document: ") + e.what());
    }

    const std::size_t p = index(a);
    const Matrix x = drazin_formula(a);
    const Matrix z = complete_inverse(a);
    check("index", p == index_expected);
    check("rank", rank(a) == rank_expected);
    check("min_poly", min_poly(a) == min_poly_expected);
    check("drazin_formula", x == drazin_expected);
    check("drazin_euclid", drazin_euclid(a) == drazin_expected);
    check("complete_inverse", z == complete_expected);

    const UInverseSpec complete_spec = UInverseSpec::for_index(p, {Equation::OneN, Equation::Four, Equation::Five});
    const UInverseSpec drazin_spec = UInverseSpec::for_index(p, {Equation::OneN, Equation::Three, Equation::Five});
    check("complete_axioms", u_inverse_check(a, complete_expected, complete_spec).verdict);
    check("drazin_axioms", u_inverse_check(a, drazin_expected, drazin_spec).verdict);

    try {
        const MatrixSequence closed = pcf(a);
        const MatrixSequence comp = theta_psi(closed, PsiMode::Identity);
        check("pcf", closed == pcf_expected);
        bool round_trip = true, bridge = true;
        for (unsigned k = 0; k <= kDefaultHorizon; ++k) {
            round_trip = round_trip && closed(k) == pow(a, k);
            bridge = bridge && comp(k) == pow(complete_expected, k);
        }
        check("pcf_round_trip", round_trip);
        check("complete_seq_bridge", bridge);
        check("drazin_seq", drazin_seq(a)(1) == drazin_expected);
        check("seq_complete_axioms", seq_u_inverse_check(closed, comp, complete_spec).verdict);
    } catch (const EligibilityError&) {
        check("pcf", false);
    }
    return out;
}

}  // namespace cinv
