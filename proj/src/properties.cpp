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

#include "cinv/properties.hpp"

#include <algorithm>

#include "cinv/generalized_inverse.hpp"
#include "cinv/pcf.hpp"

namespace cinv {

RandomMatrixSource::RandomMatrixSource(std::uint64_t seed, std::size_t max_dim, int bound)
    : engine_(seed), max_dim_(max_dim), bound_(bound) {}

Matrix RandomMatrixSource::next() {
    const std::size_t n = 1 + static_cast<std::size_t>(engine_() % max_dim_);
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound_) + 1;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>(engine_() % span) - bound_;
    return m;
}

std::string_view name(Property p) {
    switch (p) {
        case Property::DrazinRoutesAgree: return "drazin_routes_agree";
        case Property::DrazinAxioms: return "drazin_axioms";
        case Property::CompleteAxioms: return "complete_axioms";
        case Property::CompleteConstruction: return "complete_construction";
        case Property::DrazinOfDrazin: return "drazin_of_drazin";
        case Property::VIsDrazinOfX: return "v_is_drazin_of_x";
        case Property::VPowersMatchA: return "v_powers_match_a";
        case Property::PowerIdentity: return "power_identity";
        case Property::PowersAreComplete: return "powers_are_complete_inverses";
        case Property::PowersStabilize: return "powers_stabilize";
        case Property::VIsDrazinOfZ: return "v_is_drazin_of_z";
        case Property::VIsCompleteOfX: return "v_is_complete_of_x";
        case Property::AIsCompleteOfZ: return "a_is_complete_of_z";
        case Property::Invertibility: return "invertibility";
        case Property::PolynomialClosure: return "polynomial_closure";
        case Property::CoreNilpotent: return "core_nilpotent";
        case Property::SeqRoundTrip: return "seq_round_trip";
        case Property::SeqComplete: return "seq_complete";
        case Property::SeqDrazin: return "seq_drazin";
        case Property::SeqProofIdentities: return "seq_proof_identities";
        case Property::Count: break;
    }
    return "?";
}

bool MatrixAudit::passed() const {
    return std::all_of(results.begin(), results.end(), [](const std::optional<bool>& r) { return r.value_or(true); });
}

MatrixAudit audit(const Matrix& a) {
    MatrixAudit out;
    auto set = [&out](Property p, bool ok) { out.results[static_cast<std::size_t>(p)] = ok; };

    const std::size_t n = a.dim();
    const Matrix id = Matrix::identity(n);
    const std::size_t p = index(a);
    const Matrix x = drazin_formula(a);
    const Matrix v = a * a * x;
    const Matrix z = complete_inverse(a);

    const UInverseSpec drazin_spec = UInverseSpec::for_index(p, {Equation::OneN, Equation::Three, Equation::Five});
    const UInverseSpec complete_spec = UInverseSpec::for_index(p, {Equation::OneN, Equation::Four, Equation::Five});
    const unsigned pu = static_cast<unsigned>(p);

    set(Property::DrazinRoutesAgree, x == drazin_euclid(a));
    set(Property::DrazinAxioms, u_inverse_check(a, x, drazin_spec).verdict);
    set(Property::CompleteAxioms, u_inverse_check(a, z, complete_spec).verdict);
    set(Property::CompleteConstruction, z == a + x - v);
    set(Property::DrazinOfDrazin, drazin_formula(x) == v);
    set(Property::VIsDrazinOfX, u_inverse_check(x, v, drazin_spec).verdict);

    bool v_powers = true, stabilize = true;
    for (unsigned m = std::max(pu, 1u); m <= pu + 4; ++m) {
        v_powers = v_powers && pow(v, m) == pow(a, m);
        stabilize = stabilize && pow(z, m) == pow(x, m);
    }
    set(Property::VPowersMatchA, v_powers);
    set(Property::PowersStabilize, stabilize);

    bool power_identity = true, powers_complete = true;
    for (unsigned k = 1; k <= 6; ++k) {
        const Matrix zk = pow(z, k);
        power_identity = power_identity && zk == pow(a, k) + pow(x, k) - pow(v, k);
        powers_complete = powers_complete && u_inverse_check(pow(a, k), zk, complete_spec).verdict;
    }
    set(Property::PowerIdentity, power_identity);
    set(Property::PowersAreComplete, powers_complete);

    set(Property::VIsDrazinOfZ, u_inverse_check(z, v, drazin_spec).verdict);
    set(Property::VIsCompleteOfX, u_inverse_check(x, v, complete_spec).verdict);
    set(Property::AIsCompleteOfZ, u_inverse_check(z, a, complete_spec).verdict);

    const std::optional<Matrix> a_inv = inverse(a);
    const std::optional<Matrix> z_inv = inverse(z);
    bool invertibility = a_inv.has_value() == z_inv.has_value();
    if (a_inv) invertibility = invertibility && z == *a_inv && x == *a_inv && v == a;
    set(Property::Invertibility, invertibility);

    set(Property::PolynomialClosure, is_polynomial_in(z, a).has_value() && is_polynomial_in(x, z).has_value());

    const CoreNilpotentSplit split = core_nilpotent(a);
    const Matrix zero = Matrix::zero(n);
    set(Property::CoreNilpotent, split.core * split.nilpotent == zero && split.nilpotent * split.core == zero &&
                                     pow(split.nilpotent, pu) == (p == 0 ? id : zero) &&
                                     split.core + split.nilpotent == a && rank(split.core) == rank(pow(a, pu)));

    MatrixSequence closed = matrix_sequence(n);
    try {
        closed = pcf(a);
        out.eligible = true;
    } catch (const EligibilityError& e) {
        out.ineligible_reason = e.code();
        return out;
    }

    const MatrixSequence comp = complete_seq(a);
    const MatrixSequence dseq = drazin_seq(a);
    bool round_trip = true, seq_complete = true, seq_drazin = dseq(0) == id;
    for (unsigned k = 0; k <= kDefaultHorizon; ++k) {
        round_trip = round_trip && closed(k) == pow(a, k);
        seq_complete = seq_complete && comp(k) == pow(z, k);
        if (k >= 1) seq_drazin = seq_drazin && dseq(k) == pow(x, k);
    }
    set(Property::SeqRoundTrip, round_trip);
    set(Property::SeqComplete, seq_complete);
    set(Property::SeqDrazin, seq_drazin);

    // theta_0(theta_0(A)) recovers A - N(A); A + A_D - (A_D)_D = theta_1(A),
    // where (A_D)_D = theta_0(A_D) + 0_0 pi_0.
    const MatrixSequence twice = theta_psi(theta_psi(closed, PsiMode::Zero), PsiMode::Zero);
    MatrixSequence pi0_impulse = matrix_sequence(n);
    if (auto it = dseq.impulse_terms().find(0); it != dseq.impulse_terms().end()) pi0_impulse.add_impulse(0, it->second);
    const MatrixSequence dd = theta_psi(dseq, PsiMode::Zero) + pi0_impulse;
    set(Property::SeqProofIdentities, twice == closed.geometric_part() && closed + dseq - dd == comp);
    return out;
}

SuiteSummary run_property_suite(std::uint64_t seed, std::size_t count) {
    SuiteSummary out;
    out.seed = seed;
    out.count = count;
    RandomMatrixSource source(seed);
    for (std::size_t s = 0; s < count; ++s) {
        const MatrixAudit result = audit(source.next());
        if (result.eligible) ++out.eligible;
        for (std::size_t k = 0; k < kPropertyKinds; ++k) {
            const auto& r = result.results[k];
            if (!r) {
                ++out.tallies[k].skipped;
            } else if (*r) {
                ++out.tallies[k].passed;
            } else {
                ++out.tallies[k].failed;
                out.failures.emplace_back(s, static_cast<Property>(k));
            }
        }
    }
    return out;
}

}  // namespace cinv
