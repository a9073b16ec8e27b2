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

// cinv: exact Drazin and complete inverses of rational matrices.

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cinv/errors.hpp"
#include "cinv/properties.hpp"
#include "commands.hpp"

using namespace cinv;

namespace {

io::MatrixDocument load(const std::string& path) {
    if (path == "-") return io::read_matrix_document(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return io::read_matrix_document(in);
}

io::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return io::json::parse(in);
    } catch (const io::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
    }
}

int emit(const cli::CommandResult& r) {
    std::cout << r.document.dump(2) << '\n';
    if (!r.diagnostic.empty()) std::cerr << "cinv: " << r.diagnostic << '\n';
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Drazin and complete inverses of rational matrices"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string candidate;

    auto* index_cmd = app.add_subcommand("index", "Index of a square matrix");
    index_cmd->add_option("matrix", input, "Matrix document (JSON file, '-' for stdin)");

    cli::InverseKind kind = cli::InverseKind::Complete;
    cli::Route route = cli::Route::Formula;
    auto* inverse_cmd = app.add_subcommand("inverse", "Drazin or complete inverse");
    inverse_cmd->add_option("matrix", input, "Matrix document (JSON file, '-' for stdin)");
    inverse_cmd->add_option("--kind", kind, "drazin | complete")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, cli::InverseKind>{{"drazin", cli::InverseKind::Drazin},
                                                    {"complete", cli::InverseKind::Complete}},
            CLI::ignore_case));
    inverse_cmd->add_option("--route", route, "formula | euclid | sequence | all")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, cli::Route>{{"formula", cli::Route::Formula},
                                              {"euclid", cli::Route::Euclid},
                                              {"sequence", cli::Route::Sequence},
                                              {"all", cli::Route::All}},
            CLI::ignore_case));

    std::vector<std::size_t> at;
    auto* pcf_cmd = app.add_subcommand("pcf", "Closed form of the power sequence (A^k)");
    pcf_cmd->add_option("matrix", input, "Matrix document (JSON file, '-' for stdin)");
    pcf_cmd->add_option("--at", at, "Evaluate the closed form at these k (comma separated)")->delimiter(',')
        ->allow_extra_args(false);

    std::string equations = "1,4,5";
    std::optional<unsigned> n;
    auto* verify_cmd = app.add_subcommand("verify", "Check a candidate against equations (1^n), (3), (4), (5)");
    verify_cmd->add_option("matrix", input, "Matrix document")->required();
    verify_cmd->add_option("candidate", candidate, "Candidate inverse document")->required();
    verify_cmd->add_option("--equations", equations, "Subset of 1,3,4,5");
    verify_cmd->add_option("--n", n, "Exponent in (1^n), default max(index, 1)")->check(CLI::PositiveNumber);

    std::string golden_path;
    std::uint64_t seed = kPropertySeed;
    std::size_t count = kPropertyCount;
    auto* selftest_cmd = app.add_subcommand("selftest", "Golden example and fixed-seed property suite");
    selftest_cmd->add_option("--golden", golden_path, "Golden document replacing the built-in one");
    selftest_cmd->add_option("--seed", seed, "Property suite seed");
    selftest_cmd->add_option("--count", count, "Number of random matrices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitInputError;
    }

    try {
        if (*index_cmd) return emit(cli::cmd_index(load(input)));
        if (*inverse_cmd) return emit(cli::cmd_inverse(load(input), kind, route));
        if (*pcf_cmd) return emit(cli::cmd_pcf(load(input), at));
        if (*verify_cmd) return emit(cli::cmd_verify(load(input), load(candidate), equations, n));
        if (*selftest_cmd) {
            std::optional<io::json> golden;
            if (!golden_path.empty()) golden = load_json(golden_path);
            return emit(cli::cmd_selftest(golden, seed, count));
        }
    } catch (const std::invalid_argument& e) {  // ParseError, DimensionError
        std::cerr << "cinv: " << e.what() << '\n';
        return cli::kExitInputError;
    }
    return cli::kExitInputError;
}
