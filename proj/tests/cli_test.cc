// Copyright 2026 The qhash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qhash/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "qhash/report.h"

using namespace qhash;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;

    json doc() const {
        return json::parse(out);
    }
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return CliRun{code, out.str(), err.str()};
}

json without_timing(json doc) {
    doc.erase("timing");
    return doc;
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("qhash_cli_test_" + name);
}

}  // namespace

TEST(cli, parse_int_list) {
    EXPECT_EQ(parse_int_list("1,2, 3\n-4 +5"), (std::vector<int64_t>{1, 2, 3, -4, 5}));
    EXPECT_TRUE(parse_int_list(" , ").empty());
    EXPECT_THROW(parse_int_list("1,x"), std::invalid_argument);
    EXPECT_THROW(parse_int_list("1.5"), std::invalid_argument);
}

TEST(cli, hash_single_qubit) {
    CliRun r = run({"hash", "--form", "single-qubit", "--q", "4", "--s", "1", "--x", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    json d = r.doc();
    EXPECT_TRUE(validate_document(d).empty());
    EXPECT_EQ(d["command"], "hash");
    EXPECT_EQ(d["outputs"]["state"]["num_qubits"], 1);
    EXPECT_EQ(d["outputs"]["sum_qubit"], false);
    EXPECT_NEAR(d["outputs"]["state"]["amplitudes"][0].get<double>(), 0.7071067811865476, 1e-15);
    EXPECT_NEAR(d["outputs"]["state"]["amplitudes"][1].get<double>(), 0.7071067811865476, 1e-15);
    EXPECT_EQ(d["outputs"]["multi_qubit_gates"], 0);
    EXPECT_EQ(d["outputs"]["depth"], 1);
}

TEST(cli, hash_at_zero_is_basis_or_uniform) {
    json single = run({"hash", "--form", "single-qubit", "--q", "9", "--s", "2,4", "--x", "0", "--sum-qubit", "on"}).doc();
    EXPECT_EQ(single["outputs"]["state"]["amplitudes"], json({1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}));
    json shallow = run({"hash", "--form", "shallow", "--q", "9", "--s", "2,4", "--x", "0"}).doc();
    auto amps = shallow["outputs"]["state"]["amplitudes"];
    ASSERT_EQ(amps.size(), 8u);
    for (size_t i = 0; i < 8; i++) {
        EXPECT_NEAR(amps[i].get<double>(), i % 2 == 0 ? 0.5 : 0.0, 1e-15);
    }
}

TEST(cli, hash_standard_from_either_set) {
    json from_b = run({"hash", "--form", "standard", "--q", "8", "--b", "0,2,1,3", "--x", "1"}).doc();
    json from_s = run({"hash", "--form", "standard", "--q", "8", "--s", "1,2", "--x", "1"}).doc();
    EXPECT_EQ(from_b["outputs"]["state"], from_s["outputs"]["state"]);
    EXPECT_EQ(run({"hash", "--form", "standard", "--q", "8", "--b", "0,2,1", "--x", "1"}).code, 2);
    EXPECT_EQ(run({"hash", "--form", "standard", "--q", "8", "--x", "1"}).code, 2);
}

TEST(cli, hash_validation_errors_exit_2) {
    CliRun r = run({"hash", "--form", "single-qubit", "--q", "4", "--s", "1", "--x", "4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--x"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run({"hash", "--form", "phase", "--q", "4", "--s", "1", "--x", "1"}).code, 2);
    EXPECT_EQ(run({"hash", "--form", "shallow", "--q", "1", "--s", "1", "--x", "0"}).code, 2);
    EXPECT_EQ(run({"hash", "--form", "shallow", "--q", "5", "--s", "1,a", "--x", "0"}).code, 2);
    EXPECT_EQ(run({"hash", "--form", "shallow", "--q", "5", "--x", "0"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
}

TEST(cli, set_elements_are_reduced_with_warning) {
    CliRun r = run({"resist", "--q", "4", "--s", "5", "--form", "single-qubit"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_EQ(r.doc()["inputs"]["s"], json({1}));
}

TEST(cli, set_from_file) {
    auto path = temp_path("set.txt");
    std::ofstream(path) << "1\n2\n";
    json from_file = run({"resist", "--q", "8", "--s", path.string(), "--form", "shallow"}).doc();
    json inline_set = run({"resist", "--q", "8", "--s", "1,2", "--form", "shallow"}).doc();
    EXPECT_EQ(from_file["outputs"], inline_set["outputs"]);
    std::filesystem::remove(path);
}

TEST(cli, bias_sweep_and_single_x) {
    CliRun sweep = run({"bias", "--q", "8", "--b", "0,1,2,3"});
    ASSERT_EQ(sweep.code, 0);
    json d = sweep.doc();
    EXPECT_TRUE(validate_document(d).empty());
    EXPECT_EQ(d["outputs"]["mode"], "sweep");
    EXPECT_EQ(d["outputs"]["table"][3]["x"], 4);
    EXPECT_NEAR(d["outputs"]["table"][3]["value"].get<double>(), 0, 1e-12);

    EXPECT_EQ(run({"bias", "--q", "7", "--b", "0"}).doc()["outputs"]["epsilon"], 1.0);

    CliRun zero = run({"bias", "--q", "7", "--b", "0,3", "--x", "0"});
    ASSERT_EQ(zero.code, 0);
    EXPECT_EQ(zero.doc()["outputs"]["bias"], 1.0);
    EXPECT_NE(zero.err.find("x != 0"), std::string::npos);
    EXPECT_TRUE(zero.doc()["outputs"].contains("warning"));

    EXPECT_EQ(run({"bias", "--q", "2000000", "--b", "0,1"}).code, 2);
}

TEST(cli, resist_examples) {
    json d = run({"resist", "--q", "4", "--s", "1", "--form", "single-qubit", "--sum-qubit", "off"}).doc();
    EXPECT_TRUE(validate_document(d).empty());
    EXPECT_EQ(d["outputs"]["epsilon"], 0.7071067811865476);
    EXPECT_EQ(d["outputs"]["worst_x"], 1);

    CliRun shallow = run({"resist", "--q", "8", "--s", "1,2", "--form", "shallow"});
    CliRun single = run({"resist", "--q", "8", "--s", "1,2", "--form", "single-qubit", "--sum-qubit", "on"});
    EXPECT_EQ(shallow.doc()["outputs"]["epsilon"].dump(), single.doc()["outputs"]["epsilon"].dump());
    EXPECT_EQ(shallow.doc()["outputs"]["worst_x"].dump(), single.doc()["outputs"]["worst_x"].dump());
    EXPECT_EQ(shallow.doc()["outputs"]["table"], single.doc()["outputs"]["table"]);

    EXPECT_EQ(run({"resist", "--q", "9", "--s", "0,0", "--form", "shallow"}).doc()["outputs"]["epsilon"], 1.0);
    EXPECT_EQ(run({"resist", "--q", "2000000", "--s", "1"}).code, 2);
}

TEST(cli, search_is_reproducible) {
    std::vector<std::string> args{"search", "--q", "4", "--n", "1", "--trials", "100", "--seed", "3"};
    CliRun a = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    json d = a.doc();
    EXPECT_TRUE(validate_document(d).empty());
    EXPECT_EQ(d["outputs"]["epsilon"], 0.7071067811865476);
    EXPECT_EQ(without_timing(d), without_timing(run(args).doc()));

    args.insert(args.end(), {"--threads", "4"});
    EXPECT_EQ(without_timing(d)["outputs"], without_timing(run(args).doc())["outputs"]);
}

TEST(cli, search_with_target) {
    CliRun r = run({"search", "--q", "101", "--n", "4", "--trials", "10000", "--seed", "7", "--target-epsilon", "0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    json d = r.doc();
    double eps = d["outputs"]["epsilon"];
    std::vector<int64_t> s = d["outputs"]["best_set"]["s"];
    ParamSet p = ParamSet::make(101, s);
    EXPECT_EQ(collision_resistance(p, HashForm::kSingleQubit).epsilon, eps);
    EXPECT_EQ(d["inputs"]["target_epsilon"], 0.5);
}

TEST(cli, search_budget_is_enforced) {
    EXPECT_EQ(run({"search", "--q", "1000000", "--n", "20", "--trials", "1000"}).code, 2);
    EXPECT_EQ(run({"search", "--q", "17", "--n", "0"}).code, 2);
    EXPECT_EQ(run({"search", "--q", "17", "--n", "2", "--target-epsilon", "1.5"}).code, 2);
}

TEST(cli, verify_passes_and_negative_controls_fail) {
    CliRun ok = run({"verify", "--q-max", "20", "--n-max", "4", "--seed", "99", "--trials", "2"});
    ASSERT_EQ(ok.code, 0) << ok.err;
    json d = ok.doc();
    EXPECT_TRUE(validate_document(d).empty());
    EXPECT_EQ(d["outputs"]["passed"], true);
    ASSERT_EQ(d["outputs"]["checks"].size(), 4u);
    for (const json &c : d["outputs"]["checks"]) {
        EXPECT_LT(c["max_deviation"].get<double>(), 1e-10) << c["name"];
        EXPECT_GT(c["cases"].get<uint64_t>(), 0u);
    }

    CliRun bad = run({"verify", "--q-max", "12", "--trials", "2", "--inject-fault", "shallow-half-angle"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("shallow_inner"), std::string::npos);
    for (const json &c : bad.doc()["outputs"]["checks"]) {
        EXPECT_EQ(c["passed"].get<bool>(), c["name"] != "shallow_inner" && c["name"] != "equal_resistance");
    }

    CliRun ucr = run({"verify", "--q-max", "4", "--trials", "1", "--inject-fault", "drop-global-rotation", "--quiet"});
    EXPECT_EQ(ucr.code, 1);
    EXPECT_NE(ucr.err.find("ucr_decomposition"), std::string::npos);
    EXPECT_TRUE(ucr.out.empty());
}

TEST(cli, out_writes_file_instead_of_stdout) {
    auto path = temp_path("out.json");
    CliRun r = run({"resist", "--q", "8", "--s", "1,2", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    json d = json::parse(in);
    EXPECT_TRUE(validate_document(d).empty());
    std::filesystem::remove(path);
    EXPECT_EQ(run({"resist", "--q", "8", "--s", "1,2", "--out", "/nonexistent-dir/x.json"}).code, 2);
}

TEST(cli, help_exits_zero) {
    CliRun r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("search"), std::string::npos);
}
