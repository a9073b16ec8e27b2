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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "cinv/generalized_inverse.hpp"
#include "cinv/io.hpp"
#include "cinv/pcf.hpp"
#include "cinv/properties.hpp"
#include "fixtures.hpp"

using namespace cinv;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (passed) detail = what;
        passed = false;
    }
};

struct Manifest {
    std::uint64_t seed;
    std::size_t count;
    std::size_t max_dim;
    int entry_bound;
};

Manifest load_manifest() {
    std::ifstream in(CINV_MANIFEST_PATH);
    const io::json m = io::json::parse(in);
    return {m.at("seed").get<std::uint64_t>(), m.at("count").get<std::size_t>(), m.at("max_dim").get<std::size_t>(),
            m.at("entry_bound").get<int>()};
}

std::vector<Matrix> random_batch(const Manifest& m) {
    RandomMatrixSource source(m.seed, m.max_dim, m.entry_bound);
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < m.count; ++i) out.push_back(source.next());
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

UInverseSpec drazin_eqs(std::size_t p) {
    return UInverseSpec::for_index(p, {Equation::OneN, Equation::Three, Equation::Five});
}
UInverseSpec complete_eqs(std::size_t p) {
    return UInverseSpec::for_index(p, {Equation::OneN, Equation::Four, Equation::Five});
}

std::string entry_diff(const Matrix& got, const Matrix& want) {
    for (std::size_t i = 0; i < got.rows(); ++i)
        for (std::size_t j = 0; j < got.cols(); ++j)
            if (got(i, j) != want(i, j))
                return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): got " +
                       to_string(got(i, j)) + ", expected " + to_string(want(i, j));
    return "equal";
}

Outcome golden_complete_inverse() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const Matrix z = complete_inverse(test::example_a());
    const double secs = seconds_since(t0);
    const Matrix printed = test::example_complete_as_printed();
    o.require(z == printed, entry_diff(z, printed) +
                                (u_inverse_check(test::example_a(), printed, complete_eqs(2)).verdict
                                     ? ""
                                     : "; the expected matrix itself violates (1^2),(4),(5)"));
    o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s >= 1 s");
    return o;
}

Outcome golden_sequence() {
    Outcome o;
    const Matrix a = test::example_a();
    const MatrixSequence p = pcf(a);
    o.require(p.impulse_terms().size() == 2 && p.impulse_terms().count(0) && p.impulse_terms().count(1),
              "impulse positions are not {0,1}");
    if (!o.passed) return o;
    o.require(p.impulse_terms().at(0) == Matrix::identity(4) - test::example_geometric(0), "V_0 != I - G(0)");
    o.require(p.impulse_terms().at(1) == a - test::example_geometric(1), "V_1 != A - G(1)");
    o.require(p.geometric_terms().size() == 2 && p.geometric_terms().count(2) && p.geometric_terms().count(-2),
              "ratios are not {2,-2}");
    if (!o.passed) return o;
    const Matrix& w_plus = p.geometric_terms().at(2);
    const Matrix& w_minus = p.geometric_terms().at(-2);
    o.require(w_plus == test::example_w_plus(), "W at 2: " + entry_diff(w_plus, test::example_w_plus()));
    o.require(w_minus == test::example_w_minus(), "W at -2: " + entry_diff(w_minus, test::example_w_minus()));
    o.require(w_plus(0, 0) == frac(1, 2) && w_minus(2, 2) == frac(1, 2), "spot entries differ");
    for (unsigned k = 0; k <= 12; ++k) o.require(p(k) == pow(a, k), "seq_eval(pcf(A), " + std::to_string(k) + ") != A^k");
    return o;
}

Outcome bridge(const std::vector<Matrix>& batch, std::size_t& eligible) {
    Outcome o;
    std::vector<Matrix> inputs{test::example_a()};
    inputs.insert(inputs.end(), batch.begin(), batch.end());
    eligible = 0;
    for (std::size_t s = 0; s < inputs.size(); ++s) {
        MatrixSequence closed = matrix_sequence(inputs[s].dim());
        try {
            closed = pcf(inputs[s]);
        } catch (const EligibilityError&) {
            continue;
        }
        if (s > 0) ++eligible;
        const MatrixSequence comp = theta_psi(closed, PsiMode::Identity);
        const Matrix z = complete_inverse(inputs[s]);
        Matrix zk = Matrix::identity(z.dim());
        for (unsigned k = 0; k <= 12; ++k) {
            o.require(comp(k) == zk, "matrix #" + std::to_string(s) + " k=" + std::to_string(k));
            zk = zk * z;
        }
    }
    return o;
}

Outcome route_agreement(const std::vector<Matrix>& batch, double& secs) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t s = 0; s < batch.size(); ++s) {
        const Matrix& a = batch[s];
        const Matrix x = drazin_formula(a);
        o.require(x == drazin_euclid(a), "drazin routes differ on matrix #" + std::to_string(s));
        try {
            const Matrix seq_complete = complete_seq(a)(1);
            o.require(seq_complete == complete_inverse_from(a, x),
                      "sequence/algebraic complete inverse differ on matrix #" + std::to_string(s));
        } catch (const EligibilityError&) {
        }
    }
    secs = seconds_since(t0);
    o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s >= 60 s");
    return o;
}

Outcome axiom_suite(const std::vector<Matrix>& batch) {
    Outcome o;
    for (std::size_t s = 0; s < batch.size(); ++s) {
        const std::string tag = " (matrix #" + std::to_string(s) + ")";
        const Matrix& a = batch[s];
        const std::size_t p = index(a);
        const unsigned pu = static_cast<unsigned>(p);
        const Matrix x = drazin(a);
        const Matrix v = a * a * x;
        const Matrix z = complete_inverse(a);

        o.require(u_inverse_check(a, x, drazin_eqs(p)).verdict, "A_d fails {1^p,3,5}" + tag);
        o.require(u_inverse_check(a, z, complete_eqs(p)).verdict, "A_c fails {1^p,4,5}" + tag);
        for (unsigned m = std::max(pu, 1u); m <= pu + 4; ++m) {
            o.require(pow(v, m) == pow(a, m), "v^m != A^m" + tag);
            o.require(pow(z, m) == pow(x, m), "z^m != x^m" + tag);
        }
        for (unsigned k = 1; k <= 6; ++k)
            o.require(pow(z, k) == pow(a, k) + pow(x, k) - pow(v, k), "z^k != A^k + x^k - v^k" + tag);
        o.require(u_inverse_check(z, v, drazin_eqs(p)).verdict, "v is not the {1^p,3,5}-inverse of z" + tag);
        o.require(u_inverse_check(z, a, complete_eqs(p)).verdict, "A is not the {1^p,4,5}-inverse of z" + tag);

        const auto a_inv = inverse(a);
        const auto z_inv = inverse(z);
        o.require(a_inv.has_value() == z_inv.has_value(), "invertibility of A and z differ" + tag);
        if (a_inv) o.require(z == *a_inv && x == *a_inv && v == a, "invertible A but z != A^-1" + tag);
    }
    return o;
}

Outcome degenerate_cases() {
    Outcome o;
    o.require(complete_inverse(Matrix::zero(3)).is_zero(), "zero matrix");
    for (const Matrix& n : {test::nilpotent2(), Matrix{{0, 1, 2}, {0, 0, 3}, {0, 0, 0}}, Matrix{{2, -4}, {1, -2}}})
        o.require(complete_inverse(n) == n, "nilpotent:\n" + to_string(n));
    for (std::size_t d = 1; d <= 5; ++d) o.require(complete_inverse(Matrix::identity(d)) == Matrix::identity(d), "identity");
    for (const Rational& r : {Rational(1), Rational(-1), frac(3, 7), frac(-22, 5), Rational(9)})
        o.require(complete_inverse(Matrix{{r}}) == Matrix{{1 / r}}, "1x1 [[" + to_string(r) + "]]");
    return o;
}

Outcome eligibility_errors() {
    Outcome o;
    try {
        pcf(test::rotation());
        o.require(false, "rotation: pcf did not throw");
    } catch (const EligibilityError& e) {
        o.require(e.kind() == EligibilityError::Kind::NotSplit, "rotation: got " + e.code());
    }
    o.require(complete_inverse(test::rotation()) == Matrix{{0, 1}, {-1, 0}}, "rotation: algebraic complete inverse");
    o.require(drazin_formula(test::rotation()) == Matrix{{0, 1}, {-1, 0}}, "rotation: algebraic Drazin inverse");
    try {
        pcf(test::jordan_one());
        o.require(false, "Jordan block: pcf did not throw");
    } catch (const EligibilityError& e) {
        o.require(e.kind() == EligibilityError::Kind::NotSquareFree, "Jordan block: got " + e.code());
    }
    return o;
}

}  // namespace

int main() {
    const Manifest manifest = load_manifest();
    const std::vector<Matrix> batch = random_batch(manifest);
    std::size_t eligible = 0;
    double route_secs = 0;

    struct Criterion {
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"golden complete inverse of the 4x4 example equals the reference matrix", golden_complete_inverse},
        {"golden closed form: impulses {0,1}, ratios {2,-2}, W matrices, A^k for k<=12", golden_sequence},
        {"theta_1 bridge: closed form with k->-k equals A_c^k, k<=12", [&] { return bridge(batch, eligible); }},
        {"route agreement on the fixed-seed batch (formula = euclid; sequence = algebraic)",
         [&] { return route_agreement(batch, route_secs); }},
        {"axiom suite on the fixed-seed batch", [&] { return axiom_suite(batch); }},
        {"degenerate cases: zero, nilpotent, identity, 1x1", degenerate_cases},
        {"eligibility errors: rotation NOT_SPLIT, Jordan block NOT_SQUARE_FREE", eligibility_errors},
    };

    std::printf("acceptance: seed=%llu matrices=%zu\n", static_cast<unsigned long long>(manifest.seed), batch.size());
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Outcome o = criteria[i].run();
        std::printf("[%s] criterion %zu: %s", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].title);
        if (!o.passed) std::printf(" -- %s", o.detail.c_str());
        std::printf("\n");
        if (!o.passed) ++failed;
    }
    std::printf("eligible for the closed form: %zu of %zu; route agreement runtime %.2f s\n", eligible, batch.size(),
                route_secs);
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
