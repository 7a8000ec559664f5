// Copyright 2026 The qinv Authors
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

#include "qinv/cli.h"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "json.hpp"
#include "qinv/orbit.h"
#include "qinv/state_file.h"

using namespace qinv;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "qinv");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("qinv_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string write(const std::string &name, const PureState &s) {
        const auto p = dir_ / name;
        write_state_file(p, s);
        return p.string();
    }
    std::string write_text(const std::string &name, const std::string &text) {
        const auto p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string slurp(const std::string &path) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, compute_ghz_reports_tangle) {
    const auto r = run({"compute", "-s", write("ghz.json", ghz_state(3))});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["n"], 3);
    EXPECT_NEAR(doc["invariants"]["I_6"]["value"].get<double>(), 1, 1e-9);
    EXPECT_EQ(doc["invariants"]["Z"]["kind"], "complex");
    EXPECT_EQ(doc["invariants"]["Z"]["value"].size(), 2u);
}

TEST_F(CliTest, compute_product_state_has_zero_single_invariants) {
    const auto r = run({"compute", "--state", write("zero.json", PureState::basis(3, 0)), "--format", "text"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (auto name : {"I_{1}", "I_{2}", "I_{3}"}) {
        const auto pos = r.out.find(name);
        ASSERT_NE(pos, std::string::npos);
        std::istringstream line(r.out.substr(pos));
        std::string n, kind;
        double value = -1;
        line >> n >> kind >> value;
        EXPECT_EQ(value, 0.0) << name;
    }
}

TEST_F(CliTest, compute_malformed_file_exits_2_naming_length) {
    const auto r =
        run({"compute", "-s", write_text("bad.json", R"({"n_qubits": 2, "amplitudes": [[1,0],[0,0],[0,0]]})")});
    EXPECT_EQ(r.code, cli::kParseError);
    EXPECT_NE(r.err.find("expected length 4"), std::string::npos) << r.err;
}

TEST_F(CliTest, compute_syntax_error_exits_2_with_position) {
    const auto r = run({"compute", "-s", write_text("bad.json", "{\"n_qubits\": 1,\n\"amplitudes\": [}")});
    EXPECT_EQ(r.code, cli::kParseError);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST_F(CliTest, unnormalized_input) {
    const auto path = write_text("raw.json", R"({"n_qubits": 1, "amplitudes": [[1, 0], [1, 0]]})");
    EXPECT_EQ(run({"compute", "-s", path}).code, cli::kUnnormalized);
    EXPECT_EQ(run({"compute", "-s", path, "--normalize"}).code, cli::kOk);
}

TEST_F(CliTest, verify_ghz_lu_passes) {
    const auto r = run({"verify", "-s", write("ghz.json", ghz_state(3)), "--group", "lu", "--samples", "100",
                        "--tol", "1e-9"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, verify_random_four_qubits_sl_passes) {
    const auto r = run({"verify", "-s", write("r4.json", random_state(4, 9)), "--group", "sl", "--samples", "50",
                        "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc.size(), 1u);
    EXPECT_EQ(doc[0]["invariant"], "C");
    EXPECT_EQ(doc[0]["tolerance"].get<double>(), 1e-7);
    EXPECT_TRUE(doc[0]["pass"].get<bool>());
}

TEST_F(CliTest, verify_below_machine_precision_fails) {
    const auto r = run({"verify", "-s", write("r3.json", random_state(3, 2)), "--tol", "1e-16"});
    EXPECT_EQ(r.code, cli::kFailed);
    EXPECT_NE(r.err.find("worst offender"), std::string::npos);
}

TEST_F(CliTest, verify_is_deterministic_and_honours_env_seed) {
    const auto path = write("r3.json", random_state(3, 2));
    const auto a = run({"verify", "-s", path, "--seed", "5", "--samples", "10"});
    const auto b = run({"verify", "-s", path, "--seed", "5", "--samples", "10"});
    EXPECT_EQ(a.out, b.out);

    ::setenv("QINV_SEED", "5", 1);
    const auto from_env = run({"verify", "-s", path, "--samples", "10", "--format", "json"});
    const auto explicit_flag = run({"verify", "-s", path, "--samples", "10", "--format", "json", "--seed", "6"});
    ::unsetenv("QINV_SEED");
    EXPECT_EQ(nlohmann::json::parse(from_env.out)[0]["seed"], 5);
    EXPECT_EQ(nlohmann::json::parse(explicit_flag.out)[0]["seed"], 6);
}

TEST_F(CliTest, compare_lu_image_is_indistinguishable) {
    const auto ghz = ghz_state(3);
    const auto image = apply_local(ghz, random_lu(3, 4, true)).state;
    const auto r = run({"compare", write("a.json", ghz), write("b.json", image)});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.rfind("indistinguishable by computed invariants", 0), 0u);
}

TEST_F(CliTest, compare_self_has_zero_deviation) {
    const auto p = write("a.json", random_state(4, 1));
    const auto r = run({"compare", p, p});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("max deviation 0,"), std::string::npos) << r.out;
}

TEST_F(CliTest, compare_ghz_w_and_product) {
    const auto ghz = write("ghz.json", ghz_state(3));
    const auto w = run({"compare", ghz, write("w.json", w_state(3))});
    EXPECT_EQ(w.code, cli::kFailed);
    EXPECT_EQ(w.out.rfind("distinguished by I_6 (", 0), 0u) << w.out;

    const auto z = run({"compare", ghz, write("zero.json", PureState::basis(3, 0))});
    EXPECT_EQ(z.code, cli::kFailed);
    EXPECT_NE(z.out.find("  I_4 = 0.5"), std::string::npos) << z.out;
    EXPECT_NE(z.out.find(" vs 1 (deviation 0.4999"), std::string::npos) << z.out;
}

TEST_F(CliTest, compare_qubit_mismatch_exits_4) {
    const auto r = run({"compare", write("a.json", ghz_state(3)), write("b.json", ghz_state(2))});
    EXPECT_EQ(r.code, cli::kQubitMismatch);
}

TEST_F(CliTest, random_writes_reproducible_files) {
    const auto a = (dir_ / "a.json").string();
    const auto b = (dir_ / "b.json").string();
    EXPECT_EQ(run({"random", "-n", "3", "--seed", "42", "--out", a}).code, 0);
    EXPECT_EQ(run({"random", "-n", "3", "--seed", "42", "--out", b}).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    const auto s = read_state_file(a);
    EXPECT_EQ(s.dim(), 8u);
    EXPECT_NEAR(s.norm_squared(), 1, 1e-12);
    EXPECT_EQ(run({"compute", "-s", a}).code, 0);
}

TEST_F(CliTest, random_errors) {
    const auto big = run({"random", "-n", "25"});
    EXPECT_EQ(big.code, cli::kParseError);
    EXPECT_NE(big.err.find("TooLarge"), std::string::npos);
    const auto unwritable = run({"random", "-n", "2", "--out", (dir_ / "no" / "such" / "x.json").string()});
    EXPECT_EQ(unwritable.code, cli::kUnwritable);
}

TEST_F(CliTest, usage_errors_exit_2) {
    EXPECT_EQ(run({}).code, cli::kParseError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kParseError);
    EXPECT_EQ(run({"verify", "-s", "x.json", "--group", "gl"}).code, cli::kParseError);
    EXPECT_EQ(run({"compare", "only-one.json"}).code, cli::kParseError);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}
