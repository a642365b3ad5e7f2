// Copyright 2026 The povmkit Authors
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

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "povm/cli.hpp"

namespace povm {
namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code;
    std::string out;
    std::string err;
    Json report;
};

CliRun invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    cli::CommandResult r = cli::run(args, out, err);
    return {r.exit_code, out.str(), err.str(), r.report};
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        static std::atomic<int> counter{0};
        dir_ = fs::temp_directory_path() / ("povm_cli_test_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(counter++));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(CliTest, PauliConstructThenValidate) {
    const CliRun c = invoke({"construct", "--kind", "pauli-n2", "--d", "4", "--N", "15", "-o", path("p.json")});
    ASSERT_EQ(c.code, 0) << c.err;
    const CliRun v = invoke({"validate", path("p.json")});
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_TRUE(v.report["validation"]["passed"].get<bool>());
    EXPECT_EQ(Json::parse(v.out), v.report);
}

TEST_F(CliTest, ValidateFailsOnCorruptedPovm) {
    invoke({"construct", "--kind", "fixture", "--name", "sic_qubit", "-o", path("s.json")});
    Json j = read_json_file(path("s.json"));
    j["elements"][0][0][0][0] = 0.3;
    write_json_file(path("bad.json"), j);
    const CliRun v = invoke({"validate", path("bad.json"), "--tol", "1e-10"});
    EXPECT_EQ(v.code, 1);
    EXPECT_FALSE(v.report["validation"]["passed"].get<bool>());
}

TEST_F(CliTest, ValidateBornSamples) {
    invoke({"construct", "--kind", "fixture", "--name", "mub_d3", "-o", path("m.json")});
    const CliRun v = invoke({"validate", path("m.json"), "--born-samples", "50", "--seed", "3"});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.report["born"]["samples"], 50);
    EXPECT_LE(v.report["born"]["max_sum_residual"].get<double>(), 1e-10);
}

TEST_F(CliTest, RadiiD3M3) {
    const CliRun r = invoke({"radii", "--d", "3", "--M", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"r_in_sq\": 0.16666666666666666"), std::string::npos);
    EXPECT_NE(r.out.find("\"r_out_sq\": 0.6666666666666666"), std::string::npos);
}

TEST_F(CliTest, ScreenOddDimension) {
    const CliRun r = invoke({"check", "--mode", "screen", "--d", "5", "--N", "24", "--M", "2"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.report["reasons"][0], "d odd");
    const CliRun ok = invoke({"check", "--mode", "screen", "--d", "8", "--N", "21", "--M", "4"});
    EXPECT_EQ(ok.code, 0);
}

TEST_F(CliTest, CheckNecessaryAndSufficient) {
    invoke({"construct", "--kind", "fixture", "--name", "mub_d3", "-o", path("m.json")});
    EXPECT_EQ(invoke({"check", "--mode", "necessary", "--input", path("m.json")}).code, 0);
    EXPECT_EQ(invoke({"check", "--mode", "sufficient", "--input", path("m.json")}).code, 1);
    EXPECT_EQ(invoke({"check", "--mode", "sufficient", "--d", "3", "--N", "4", "--M", "3", "--x", "0.5"}).code, 0);
    // not optimal: regime error
    invoke({"construct", "--kind", "sufficient", "--d", "3", "--N", "4", "--M", "3", "-o", path("s.json")});
    EXPECT_EQ(invoke({"check", "--mode", "necessary", "--input", path("s.json")}).code, 2);
}

TEST_F(CliTest, ConstructSufficientWithFilesAndRotation) {
    write_json_file(path("b.json"), basis_to_json(gell_mann_basis(3)));
    write_json_file(path("part.json"), partition_to_json(fig1_partition()));
    const CliRun r = invoke({"construct", "--kind", "sufficient", "--d", "3", "--N", "4", "--M", "3", "--x", "0.5",
                          "--basis", path("b.json"), "--partition", path("part.json"), "--rotate-basis", "--seed",
                          "9", "--report", "-o", path("out.json")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.report.contains("construction"));
    EXPECT_EQ(r.report["construction"]["min_eigenvalues"].size(), 12u);
    const CliRun over = invoke({"construct", "--kind", "sufficient", "--d", "3", "--N", "4", "--M", "3", "--x",
                             "0.55", "-o", path("o.json")});
    EXPECT_EQ(over.code, 2);
}

TEST_F(CliTest, ConstructMum3Report) {
    const CliRun r = invoke({"construct", "--kind", "mum3", "--report", "-o", path("mum.json")});
    ASSERT_EQ(r.code, 0);
    EXPECT_NEAR(r.report["construction"]["x"].get<double>(), 5.0 / 9.0, 1e-9);
    EXPECT_EQ(r.report["construction"]["blocks"][1]["feasible_set"], "points");
    EXPECT_EQ(invoke({"validate", path("mum.json")}).code, 0);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    const CliRun r = invoke({"radii", "--d", "3", "--M", "3", "--bogus"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
    EXPECT_EQ(invoke({"construct", "--kind", "sufficient", "-o", path("x.json")}).code, 2);
    EXPECT_EQ(invoke({"construct", "--kind", "magic", "-o", path("x.json")}).code, 2);
    EXPECT_EQ(invoke({"validate", path("missing.json")}).code, 2);
    EXPECT_EQ(invoke({"help"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, CurveAndScanFormats) {
    const CliRun csv = invoke({"curve", "--d-max", "4", "--rule", "M_ge_d", "--format", "csv"});
    EXPECT_EQ(csv.out, "d,R\n2,1\n3,0.25\n4,0.1111111111111111\n");
    const CliRun js = invoke({"curve", "--d-max", "4"});
    EXPECT_EQ(js.report["points"].size(), 3u);
    const CliRun scan = invoke({"scan", "--d", "3", "--M", "3", "--mu", "2", "--nu", "9", "--n", "32"});
    EXPECT_EQ(scan.code, 0);
    EXPECT_EQ(scan.out.substr(0, 16), "u,v,min_eig,psd\n");
    const CliRun sj = invoke({"scan", "--n", "32", "--format", "json", "--triangle-x", "0.5555555555555556"});
    EXPECT_EQ(sj.report["psd"].size(), 32u * 32u);
    EXPECT_EQ(sj.report["triangle"].size(), 3u);
    EXPECT_EQ(invoke({"scan", "--mu", "1"}).code, 2);
}

TEST_F(CliTest, Fixtures) {
    const CliRun r = invoke({"fixtures", "--write-dir", path("fx")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.report["fixtures"].size(), 3u);
    for (const char* n : {"sic_qubit", "mub_d2", "mub_d3"}) {
        EXPECT_TRUE(fs::exists(dir_ / "fx" / (std::string(n) + ".json")));
        EXPECT_EQ(invoke({"validate", path(std::string("fx/") + n + ".json")}).code, 0);
    }
}

TEST_F(CliTest, ByteIdenticalReports) {
    const std::vector<std::vector<std::string>> cmds = {
        {"construct", "--kind", "sufficient", "--d", "4", "--N", "5", "--M", "4", "--rotate-basis", "--seed", "77",
         "--report", "-o", path("r.json")},
        {"validate", path("r.json"), "--born-samples", "20", "--seed", "5"},
        {"construct", "--kind", "mum3", "--report", "-o", path("m.json")},
        {"scan", "--n", "24"},
    };
    for (const auto& c : cmds) {
        const CliRun a = invoke(c);
        const std::string file_a = c[0] == "construct" ? Json(read_json_file(c.back())).dump() : "";
        const CliRun b = invoke(c);
        const std::string file_b = c[0] == "construct" ? Json(read_json_file(c.back())).dump() : "";
        EXPECT_EQ(a.out, b.out) << c[0];
        EXPECT_EQ(file_a, file_b);
    }
}

#ifdef POVM_CLI_PATH
TEST_F(CliTest, BinaryExitCodes) {
    const std::string exe = POVM_CLI_PATH;
    auto sh = [&](const std::string& args) {
        const int status = std::system((exe + " " + args + " > " + path("o.txt") + " 2>&1").c_str());
        return WEXITSTATUS(status);
    };
    EXPECT_EQ(sh("construct --kind pauli-n2 --d 4 --N 15 -o " + path("p.json")), 0);
    EXPECT_EQ(sh("validate " + path("p.json")), 0);
    EXPECT_EQ(sh("check --mode screen --d 5 --N 24 --M 2"), 1);
    EXPECT_EQ(sh("nonsense"), 2);
}
#endif

}  // namespace
}  // namespace povm
