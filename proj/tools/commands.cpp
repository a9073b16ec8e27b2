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

#include "commands.hpp"

#include <map>

#include "cinv/errors.hpp"
#include "cinv/generalized_inverse.hpp"
#include "cinv/min_poly.hpp"
#include "cinv/pcf.hpp"
#include "cinv/properties.hpp"
#include "cinv/selftest.hpp"

namespace cinv::cli {

namespace {

io::json header(const std::string& name, const io::MatrixDocument& input) {
    io::json doc;
    doc["command"] = {{"name", name}};
    doc["input_digest"] = io::digest(input.matrix);
    if (input.label) doc["label"] = *input.label;
    return doc;
}

io::json eligibility_json(const EligibilityError& e) { return {{"error", e.code()}, {"factor", to_string(e.factor())}}; }

CommandResult ineligible(io::json doc, const EligibilityError& e) {
    doc["status"] = e.code();
    doc["outputs"]["error"] = eligibility_json(e);
    return {std::move(doc), kExitIneligible, e.what()};
}

Matrix inverse_by(const Matrix& a, InverseKind kind, Route route) {
    switch (route) {
        case Route::Formula: {
            Matrix x = drazin_formula(a);
            return kind == InverseKind::Drazin ? x : complete_inverse_from(a, x);
        }
        case Route::Euclid: {
            Matrix x = drazin_euclid(a);
            return kind == InverseKind::Drazin ? x : complete_inverse_from(a, x);
        }
        case Route::Sequence: return kind == InverseKind::Drazin ? drazin_seq(a)(1) : complete_seq(a)(1);
        case Route::All: break;
    }
    throw std::logic_error("inverse_by: route 'all' is not a single route");
}

const char* route_name(Route r) {
    switch (r) {
        case Route::Formula: return "formula";
        case Route::Euclid: return "euclid";
        case Route::Sequence: return "sequence";
        case Route::All: return "all";
    }
    return "?";
}

}  // namespace

CommandResult cmd_index(const io::MatrixDocument& input) {
    io::json doc = header("index", input);
    doc["outputs"] = {{"index", index(input.matrix)}};
    doc["status"] = "ok";
    return {std::move(doc)};
}

CommandResult cmd_inverse(const io::MatrixDocument& input, InverseKind kind, Route route) {
    io::json doc = header("inverse", input);
    doc["command"]["kind"] = kind == InverseKind::Drazin ? "drazin" : "complete";
    doc["command"]["route"] = route_name(route);
    const Matrix& a = input.matrix;

    if (route != Route::All) {
        try {
            doc["outputs"] = {{route_name(route), io::to_json(inverse_by(a, kind, route))}};
        } catch (const EligibilityError& e) {
            return ineligible(std::move(doc), e);
        }
        doc["status"] = "ok";
        return {std::move(doc)};
    }

    std::vector<Matrix> results;
    io::json outputs;
    for (Route r : {Route::Formula, Route::Euclid, Route::Sequence}) {
        try {
            results.push_back(inverse_by(a, kind, r));
            outputs[route_name(r)] = io::to_json(results.back());
        } catch (const EligibilityError& e) {
            outputs[route_name(r)] = eligibility_json(e);
        }
    }
    bool agree = true;
    for (const Matrix& m : results) agree = agree && m == results.front();
    outputs["agreement"] = agree;
    doc["outputs"] = std::move(outputs);
    doc["status"] = agree ? "ok" : "routes_disagree";
    return {std::move(doc), agree ? kExitOk : kExitFailed, agree ? "" : "inverse routes disagree"};
}

CommandResult cmd_pcf(const io::MatrixDocument& input, const std::vector<std::size_t>& evaluate_at) {
    io::json doc = header("pcf", input);
    const Matrix& a = input.matrix;
    MatrixSequence closed = matrix_sequence(a.dim());
    try {
        closed = pcf(a);
    } catch (const EligibilityError& e) {
        return ineligible(std::move(doc), e);
    }
    io::json outputs;
    outputs["min_poly"] = io::to_json(min_poly(a));
    outputs["sequence"] = io::to_json(closed);
    if (!evaluate_at.empty()) {
        io::json evals = io::json::array();
        for (std::size_t k : evaluate_at) evals.push_back({{"k", k}, {"value", io::to_json(closed(k))}});
        outputs["evaluations"] = std::move(evals);
    }
    doc["outputs"] = std::move(outputs);
    doc["status"] = "ok";
    return {std::move(doc)};
}

CommandResult cmd_verify(const io::MatrixDocument& input, const io::MatrixDocument& candidate,
                         const std::string& equations, std::optional<unsigned> n) {
    if (input.matrix.dim() != candidate.matrix.dim())
        throw DimensionError("candidate has order " + std::to_string(candidate.matrix.dim()) + ", matrix has order " +
                             std::to_string(input.matrix.dim()));
    const unsigned exponent = n.value_or(static_cast<unsigned>(std::max<std::size_t>(index(input.matrix), 1)));
    const UInverseSpec spec = UInverseSpec::parse(exponent, equations);
    const InverseReport report = u_inverse_check(input.matrix, candidate.matrix, spec);

    io::json doc = header("verify", input);
    doc["command"]["equations"] = equations;
    doc["command"]["n"] = exponent;
    doc["candidate_digest"] = io::digest(candidate.matrix);
    doc["outputs"] = {{"equations", io::to_json(report)}};
    doc["status"] = report.verdict ? "verified" : "failed";
    return {std::move(doc), report.verdict ? kExitOk : kExitFailed, report.verdict ? "" : "verification failed"};
}

CommandResult cmd_selftest(const std::optional<io::json>& golden, std::uint64_t seed, std::size_t count) {
    io::json doc;
    doc["command"] = {{"name", "selftest"}, {"seed", seed}, {"count", count}};

    const std::vector<GoldenCheck> checks = run_golden_suite(golden ? *golden : default_golden());
    io::json golden_out = io::json::object();
    std::size_t golden_failed = 0;
    for (const GoldenCheck& c : checks) {
        golden_out[c.name] = c.passed;
        if (!c.passed) ++golden_failed;
    }

    const SuiteSummary suite = run_property_suite(seed, count);
    io::json tallies = io::json::object();
    for (std::size_t k = 0; k < kPropertyKinds; ++k) {
        const PropertyTally& t = suite.tallies[k];
        tallies[std::string(name(static_cast<Property>(k)))] = {
            {"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}};
    }
    io::json failures = io::json::array();
    for (const auto& [sample, prop] : suite.failures)
        failures.push_back({{"sample", sample}, {"property", std::string(name(prop))}});

    doc["outputs"] = {
        {"golden", {{"checks", golden_out}, {"passed", checks.size() - golden_failed}, {"failed", golden_failed}}},
        {"properties",
         {{"matrices", suite.count}, {"eligible", suite.eligible}, {"tallies", tallies}, {"failures", failures}}}};

    const bool ok = golden_failed == 0 && suite.passed();
    doc["status"] = ok ? "pass" : "fail";
    std::string diag;
    if (!ok)
        diag = "selftest failed: " + std::to_string(golden_failed) + " golden check(s), " +
               std::to_string(suite.failures.size()) + " property violation(s)";
    return {std::move(doc), ok ? kExitOk : kExitFailed, std::move(diag)};
}

}  // namespace cinv::cli
