// Copyright 2026 The birvol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "birvol/cli/app.hpp"
#include "birvol/cli/io.hpp"

namespace birvol::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("birvol_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(CliTest, ModelBuildReportsEigenvalue) {
  const Result r = call({"model", "build", "--oguiso", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["lambda"], nlohmann::json::array({"17", "1", "12", "1"}));
  EXPECT_EQ(doc["disc"], "2");
}

TEST_F(CliTest, VolEval) {
  const Result r = call({"vol", "eval", "--oguiso", "3", "--class", "1,1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["vol"], "40");
}

TEST_F(CliTest, KappaFit) {
  const Result r = call({"kappa", "fit", "--oguiso", "3", "--ray", "R1", "--dyadic", "18", "--out", dir_.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["l_hat"].get<double>(), 1.5, 0.05);
  EXPECT_EQ(doc["claim"], 1.5);
  EXPECT_EQ(doc["pass"], true);
  EXPECT_EQ(doc["kappa_sigma_note"], "by theorem, not computed");
  const std::string csv = read_file(dir_ / "series.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "m,vol,L1,L2_reduced,ratio_to_claim");
  for (const auto& e : fs::directory_iterator(dir_)) EXPECT_NE(e.path().extension(), ".tmp");
}

TEST_F(CliTest, FailedClaimExitsOne) {
  const Result r = call({"kappa", "fit", "--oguiso", "3", "--ray", "R1", "--claim", "2.5"});
  EXPECT_EQ(r.code, kCheckFailed);
}

TEST_F(CliTest, SchemaErrorsExitTwo) {
  Result r = call({"vol", "eval", "--oguiso", "3", "--class", "1;1"});
  EXPECT_EQ(r.code, kSchema);
  EXPECT_NE(r.err.find("--class"), std::string::npos);
  r = call({"vol", "eval", "--oguiso", "3", "--bogus"});
  EXPECT_EQ(r.code, kSchema);
  write_atomic(dir_ / "cfg.json", R"({"oguiso": 3, "colour": "red"})");
  r = call({"vol", "eval", "--config", (dir_ / "cfg.json").string()});
  EXPECT_EQ(r.code, kSchema);
  EXPECT_NE(r.err.find("$.colour"), std::string::npos);
  write_atomic(dir_ / "model.json", R"({"dim": 3, "inters": ["2", "x"]})");
  r = call({"vol", "eval", "--custom", (dir_ / "model.json").string(), "--class", "1,1"});
  EXPECT_EQ(r.code, kSchema);
  EXPECT_NE(r.err.find("$.inters[1]"), std::string::npos);
}

TEST_F(CliTest, MathErrorsExitThree) {
  Result r = call({"model", "build", "--oguiso", "2"});
  EXPECT_EQ(r.code, kMath);
  r = call({"vol", "eval", "--oguiso", "3", "--class", "-1,-1"});
  EXPECT_EQ(r.code, kMath);
  r = call({"hk", "kappa", "--fixture", "1", "--class", "0,0,0,0", "--ample", "1,1,1,1"});
  EXPECT_TRUE(r.code == kMath || r.code == kSchema);
}

TEST_F(CliTest, ConfigSuppliesParameters) {
  write_atomic(dir_ / "cfg.json", R"({"oguiso": 3, "class": "2,2"})");
  Result r = call({"vol", "eval", "--config", (dir_ / "cfg.json").string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["vol"], "320");
  r = call({"vol", "eval", "--config", (dir_ / "cfg.json").string(), "--class", "1,1"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["vol"], "40");
}

TEST_F(CliTest, CustomRoundTripIsByteIdentical) {
  const Result built = call({"model", "build", "--oguiso", "4"});
  ASSERT_EQ(built.code, kOk);
  write_atomic(dir_ / "m.json", built.out);
  const std::string custom = (dir_ / "m.json").string();
  const std::vector<std::vector<std::string>> commands = {
      {"vol", "eval", "--class", "-7,41"},
      {"reduce", "--class", "-100,900"},
      {"kappa", "fit", "--ray", "R2", "--dyadic", "14"},
      {"lemma44", "--count", "10"},
  };
  for (auto cmd : commands) {
    auto a = cmd;
    a.insert(a.end(), {"--oguiso", "4"});
    auto b = cmd;
    b.insert(b.end(), {"--custom", custom});
    const Result ra = call(a);
    const Result rb = call(b);
    EXPECT_EQ(ra.code, rb.code);
    EXPECT_EQ(ra.out, rb.out) << cmd.front();
  }
}

TEST_F(CliTest, ReduceReportsWord) {
  const Result r = call({"reduce", "--oguiso", "3", "--class", "-7,41"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["word"], "t1t2");
  EXPECT_EQ(doc["power"], 1);
  EXPECT_EQ(doc["chamber"], 0);
}

TEST_F(CliTest, KappaReports) {
  Result r = call({"kappa", "independence", "--oguiso", "3", "--ray", "R1", "--amples", "1,1;2,3;5,1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_LT(nlohmann::json::parse(r.out)["max_deviation"].get<double>(), 0.02);
  r = call({"kappa", "multiples", "--oguiso", "3", "--ray", "R1", "--multiples", "2,3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["pass"], true);
}

TEST_F(CliTest, FloorBoundCommands) {
  Result r = call({"lemma44", "--oguiso", "3", "--seed", "5", "--count", "20"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["seed"], 5);
  r = call({"lemma44", "--oguiso", "3", "--expr", "1,0:3/2;0,1:9/4", "--ample", "9,9"});
  ASSERT_EQ(r.code, kOk) << r.err;
  r = call({"lemma44", "--oguiso", "3", "--expr", "1,1:1/2", "--ample", "1,1"});
  EXPECT_EQ(r.code, kMath);
}

TEST_F(CliTest, HkCommands) {
  write_atomic(dir_ / "hk.json", R"({"rho": 2, "gram": [0, 1, 1, 0], "c_X": "3", "d": 2})");
  const std::string hk = (dir_ / "hk.json").string();
  Result r = call({"hk", "q", "--hk", hk, "--class", "1,0", "--with", "1,1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["q"], "0");
  EXPECT_EQ(doc["q_pair"], "1");
  EXPECT_EQ(doc["classification"], "boundary_non_big");
  r = call({"hk", "vol", "--hk", hk, "--class", "1,1"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["vol"], "12");
  r = call({"hk", "kappa", "--hk", hk, "--class", "1,0", "--ample", "1,1"});
  doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["exponent"], 2);
  EXPECT_EQ(doc["growth_poly"], nlohmann::json::array({"12", "24", "12"}));
  r = call({"hk", "q", "--hk", hk, "--class", "1,-1"});
  EXPECT_EQ(r.code, kCheckFailed);
  write_atomic(dir_ / "bad.json", R"({"rho": 2, "gram": [1, 0, 0, 1], "c_X": "1", "d": 1})");
  r = call({"hk", "q", "--hk", (dir_ / "bad.json").string(), "--class", "1,0"});
  EXPECT_EQ(r.code, kMath);
}

TEST_F(CliTest, SuiteAcceptanceIsDeterministic) {
  const fs::path a = dir_ / "a";
  const fs::path b = dir_ / "b";
  const Result ra = call({"suite", "acceptance", "--out", a.string()});
  const Result rb = call({"suite", "acceptance", "--out", b.string(), "--threads", "3"});
  EXPECT_EQ(ra.code, rb.code);
  EXPECT_EQ(ra.out, rb.out);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    ++files;
    EXPECT_EQ(read_file(e.path()), read_file(b / e.path().filename())) << e.path().filename();
  }
  EXPECT_GE(files, 10u);
  const auto manifest = nlohmann::json::parse(read_file(a / "acceptance.json"));
  EXPECT_EQ(manifest["criteria"].size(), 10u);
}

TEST(Io, FormatDouble) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(40.0), "40");
  EXPECT_EQ(csv_line({"a", "b,c"}), "a,\"b,c\"\n");
}

}  // namespace
}  // namespace birvol::cli
