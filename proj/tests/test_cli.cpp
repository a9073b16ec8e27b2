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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cinv/errors.hpp"
#include "cinv/io.hpp"
#include "cinv/pcf.hpp"
#include "cinv/properties.hpp"
#include "cinv/selftest.hpp"
#include "commands.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cinv;
using cinv::io::json;

namespace {

io::MatrixDocument doc(const Matrix& m) { return {m, std::nullopt}; }

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    auto path = std::filesystem::temp_directory_path() / ("cinv_test_" + name);
    std::ofstream(path) << contents;
    return path;
}

struct Run {
    int exit_code;
    std::string out;
};

Run run_cli(const std::string& args) {
    const auto out_path = std::filesystem::temp_directory_path() / "cinv_test_stdout.json";
    const std::string cmd = std::string(CINV_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

const std::string kExampleFile = std::string(CINV_DATA_DIR) + "/example1.json";

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("matrix documents") {
        const json j = json::parse(R"({"matrix": [["1", "-7/16"], [3, "−2/4"]], "label": "m"})");
        const io::MatrixDocument d = io::parse_matrix_document(j);
        CHECK(d.matrix == Matrix{{1, test::q(-7, 16)}, {3, test::q(-1, 2)}});
        CHECK(d.label == "m");
        CHECK(io::to_json(d.matrix) == json::parse(R"([["1", "-7/16"], ["3", "-1/2"]])"));

        CHECK(io::parse_matrix_document(json::parse(R"([["2"]])")).matrix == Matrix{{2}});

        for (const char* bad : {R"({"matrix": [["1", "2"]]})", R"({"matrix": []})", R"({"matrix": [["1.5"]]})",
                                R"({"matrix": [[1.5]]})", R"({"matrix": [["1/0"]]})", R"({"rows": [["1"]]})",
                                R"({"matrix": [["1"]], "label": 3})"})
            CHECK_THROWS_AS(io::parse_matrix_document(json::parse(bad)), ParseError);

        std::istringstream broken("{\"matrix\": [");
        CHECK_THROWS_AS(io::read_matrix_document(broken), ParseError);
    }

    TEST_CASE("emitted documents round-trip byte for byte") {
        RandomMatrixSource source(17);
        for (int s = 0; s < 40; ++s) {
            Matrix a = source.next();
            a *= test::q(s + 1, 3 + s % 4);
            const std::string once = io::to_json(a).dump();
            const std::string twice = io::to_json(io::matrix_from_json(json::parse(once))).dump();
            CHECK(once == twice);
            try {
                const MatrixSequence p = pcf(a);
                const std::string seq = io::to_json(p).dump();
                CHECK(io::to_json(io::sequence_from_json(json::parse(seq))).dump() == seq);
                CHECK(io::sequence_from_json(json::parse(seq)) == p);
            } catch (const EligibilityError&) {
            }
        }
    }

    TEST_CASE("digest depends only on the value") {
        CHECK(io::digest(Matrix{{test::q(2, 4)}}) == io::digest(Matrix{{test::q(1, 2)}}));
        CHECK(io::digest(Matrix{{1}}) != io::digest(Matrix{{2}}));
        CHECK(io::digest(Matrix{{1}}).rfind("fnv1a64:", 0) == 0);
    }

    TEST_CASE("built-in golden document matches data/example1_golden.json") {
        std::ifstream in(std::string(CINV_DATA_DIR) + "/example1_golden.json");
        CHECK(json::parse(in) == default_golden());
    }

    TEST_CASE("property manifest matches the library defaults") {
        std::ifstream in(CINV_MANIFEST_PATH);
        const json m = json::parse(in);
        CHECK(m.at("seed").get<std::uint64_t>() == kPropertySeed);
        CHECK(m.at("count").get<std::size_t>() == kPropertyCount);
        CHECK(m.at("max_dim").get<std::size_t>() == kPropertyMaxDim);
        CHECK(m.at("entry_bound").get<int>() == kPropertyEntryBound);
    }
}

TEST_SUITE("commands") {
    TEST_CASE("index") {
        CHECK(cli::cmd_index(doc(test::example_a())).document["outputs"]["index"] == 2);
        CHECK(cli::cmd_index(doc(Matrix::identity(3))).document["outputs"]["index"] == 0);
        CHECK(cli::cmd_index(doc(test::nilpotent2())).document["outputs"]["index"] == 2);
    }

    TEST_CASE("inverse, all routes agree on the worked example") {
        const cli::CommandResult r = cli::cmd_inverse(doc(test::example_a()), cli::InverseKind::Complete, cli::Route::All);
        CHECK(r.exit_code == cli::kExitOk);
        const json expected = io::to_json(test::example_complete());
        CHECK(r.document["outputs"]["formula"] == expected);
        CHECK(r.document["outputs"]["euclid"] == expected);
        CHECK(r.document["outputs"]["sequence"] == expected);
        CHECK(r.document["outputs"]["agreement"] == true);
        CHECK(r.document["input_digest"] == io::digest(test::example_a()));
    }

    TEST_CASE("inverse, single routes") {
        const Matrix d{{2, 0}, {0, 3}};
        const cli::CommandResult r = cli::cmd_inverse(doc(d), cli::InverseKind::Drazin, cli::Route::Formula);
        CHECK(r.document["outputs"]["formula"] == json::parse(R"([["1/2", "0"], ["0", "1/3"]])"));

        const cli::CommandResult e = cli::cmd_inverse(doc(test::example_a()), cli::InverseKind::Drazin, cli::Route::Euclid);
        CHECK(e.document["outputs"]["euclid"] == io::to_json(test::example_drazin()));
        const cli::CommandResult s = cli::cmd_inverse(doc(test::example_a()), cli::InverseKind::Drazin, cli::Route::Sequence);
        CHECK(s.document["outputs"]["sequence"] == io::to_json(test::example_drazin()));
    }

    TEST_CASE("inverse of a rotation: sequence route ineligible, formula fine") {
        const cli::CommandResult seq = cli::cmd_inverse(doc(test::rotation()), cli::InverseKind::Complete, cli::Route::Sequence);
        CHECK(seq.exit_code == cli::kExitIneligible);
        CHECK(seq.document["status"] == "NOT_SPLIT");
        CHECK(seq.document["outputs"]["error"]["factor"] == "X^2 + 1");
        CHECK_FALSE(seq.diagnostic.empty());

        const cli::CommandResult f = cli::cmd_inverse(doc(test::rotation()), cli::InverseKind::Complete, cli::Route::Formula);
        CHECK(f.exit_code == cli::kExitOk);
        CHECK(f.document["outputs"]["formula"] == json::parse(R"([["0", "1"], ["-1", "0"]])"));

        const cli::CommandResult all = cli::cmd_inverse(doc(test::rotation()), cli::InverseKind::Complete, cli::Route::All);
        CHECK(all.exit_code == cli::kExitOk);
        CHECK(all.document["outputs"]["sequence"]["error"] == "NOT_SPLIT");
    }

    TEST_CASE("pcf") {
        const cli::CommandResult r = cli::cmd_pcf(doc(test::example_a()), {4});
        CHECK(r.exit_code == cli::kExitOk);
        const json& seq = r.document["outputs"]["sequence"];
        REQUIRE(seq["impulse"].size() == 2);
        CHECK(seq["impulse"][0]["i"] == 0);
        CHECK(seq["impulse"][1]["i"] == 1);
        REQUIRE(seq["geometric"].size() == 2);
        CHECK(seq["geometric"][0]["lambda"] == "-2");
        CHECK(seq["geometric"][1]["lambda"] == "2");
        CHECK(seq["geometric"][1]["W"] == io::to_json(test::example_w_plus()));
        CHECK(r.document["outputs"]["evaluations"][0]["value"] == io::to_json(pow(test::example_a(), 4)));

        const cli::CommandResult i = cli::cmd_pcf(doc(Matrix::identity(2)), {});
        CHECK(i.document["outputs"]["sequence"]["geometric"].size() == 1);
        CHECK(i.document["outputs"]["sequence"]["geometric"][0]["lambda"] == "1");

        const cli::CommandResult j = cli::cmd_pcf(doc(test::jordan_one()), {});
        CHECK(j.exit_code == cli::kExitIneligible);
        CHECK(j.document["status"] == "NOT_SQUARE_FREE");
    }

    TEST_CASE("verify") {
        const auto a = doc(test::example_a());
        CHECK(cli::cmd_verify(a, doc(test::example_complete()), "1,4,5", std::nullopt).exit_code == cli::kExitOk);
        CHECK(cli::cmd_verify(doc(Matrix::identity(3)), doc(Matrix::identity(3)), "3", std::nullopt).exit_code ==
              cli::kExitOk);
        const cli::CommandResult three = cli::cmd_verify(a, doc(test::example_complete()), "3", std::nullopt);
        CHECK(three.exit_code == cli::kExitFailed);
        CHECK(three.document["outputs"]["equations"]["3"] == false);
        CHECK(cli::cmd_verify(a, doc(test::example_complete_as_printed()), "1,4,5", std::nullopt).exit_code ==
              cli::kExitFailed);
        CHECK(cli::cmd_verify(a, doc(test::example_complete()), "1", 1u).exit_code == cli::kExitFailed);
        CHECK_THROWS_AS(cli::cmd_verify(a, doc(Matrix::identity(2)), "3", std::nullopt), DimensionError);
        CHECK_THROWS_AS(cli::cmd_verify(a, doc(test::example_complete()), "2", std::nullopt), ParseError);
    }

    TEST_CASE("selftest with built-in and corrupted golden data") {
        const cli::CommandResult ok = cli::cmd_selftest(std::nullopt, kPropertySeed, 25);
        CHECK(ok.exit_code == cli::kExitOk);
        CHECK(ok.document["outputs"]["golden"]["failed"] == 0);
        CHECK(ok.document["outputs"]["properties"]["matrices"] == 25);

        json corrupted = default_golden();
        corrupted["complete"][0][3] = "19/16";
        const cli::CommandResult bad = cli::cmd_selftest(corrupted, kPropertySeed, 5);
        CHECK(bad.exit_code == cli::kExitFailed);
        CHECK(bad.document["outputs"]["golden"]["checks"]["complete_inverse"] == false);
        CHECK(bad.document["status"] == "fail");
    }
}

TEST_SUITE("cli binary") {
    TEST_CASE("exit codes") {
        CHECK(run_cli("index " + kExampleFile).exit_code == 0);
        CHECK(json::parse(run_cli("index " + kExampleFile).out)["outputs"]["index"] == 2);
        CHECK(run_cli("inverse --kind complete --route all " + kExampleFile).exit_code == 0);

        const auto rot = temp_file("rot.json", R"({"matrix": [["0", "-1"], ["1", "0"]]})");
        CHECK(run_cli("inverse --kind complete --route sequence " + rot.string()).exit_code == 3);
        CHECK(run_cli("inverse --kind complete --route formula " + rot.string()).exit_code == 0);
        CHECK(run_cli("pcf " + rot.string()).exit_code == 3);

        const auto printed = temp_file("printed.json", io::json{{"matrix", io::to_json(test::example_complete_as_printed())}}.dump());
        const auto good = temp_file("good.json", io::json{{"matrix", io::to_json(test::example_complete())}}.dump());
        CHECK(run_cli("verify " + kExampleFile + " " + good.string() + " --equations 1,4,5").exit_code == 0);
        CHECK(run_cli("verify " + kExampleFile + " " + good.string() + " --equations 3").exit_code == 1);
        CHECK(run_cli("verify " + kExampleFile + " " + printed.string()).exit_code == 1);

        const auto garbage = temp_file("garbage.json", "{\"matrix\": [[\"x\"]]}");
        CHECK(run_cli("index " + garbage.string()).exit_code == 2);
        CHECK(run_cli("index /nonexistent/file.json").exit_code == 2);
        CHECK(run_cli("inverse --route sideways " + kExampleFile).exit_code == 2);
        CHECK(run_cli("index < " + kExampleFile).exit_code == 0);

        json corrupted = default_golden();
        corrupted["drazin"][0][0] = "1/5";
        const auto golden = temp_file("golden.json", corrupted.dump());
        CHECK(run_cli("selftest --count 3 --golden " + golden.string()).exit_code == 1);
        CHECK(run_cli("selftest --count 3").exit_code == 0);
    }

    TEST_CASE("pcf output evaluates and re-emits identically") {
        const Run r = run_cli("pcf --at 4,5 " + kExampleFile);
        REQUIRE(r.exit_code == 0);
        const json out = json::parse(r.out);
        CHECK(out["outputs"]["evaluations"][1]["value"] == io::to_json(pow(test::example_a(), 5)));
        const MatrixSequence s = io::sequence_from_json(out["outputs"]["sequence"]);
        CHECK(io::to_json(s) == out["outputs"]["sequence"]);
    }
}
