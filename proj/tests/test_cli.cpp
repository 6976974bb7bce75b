// Copyright 2026 The curvlab Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "curvlab/cli.hpp"
#include "curvlab/errors.hpp"
#include "curvlab/framespec.hpp"
#include "curvlab/report.hpp"

namespace curvlab {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("curvlab_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string frame(const std::string& name, const HolomorphicFrame& f) {
    const std::string path = (dir_ / (name + ".json")).string();
    save_frame_file(f, path);
    return path;
  }
  std::string raw(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

TEST(ParseComplex, Forms) {
  EXPECT_EQ(cli::parse_complex("0.5"), Complex(0.5, 0));
  EXPECT_EQ(cli::parse_complex("0.3+0.1i"), Complex(0.3, 0.1));
  EXPECT_EQ(cli::parse_complex("0.3-0.1i"), Complex(0.3, -0.1));
  EXPECT_EQ(cli::parse_complex("-2i"), Complex(0, -2));
  EXPECT_EQ(cli::parse_complex("i"), Complex(0, 1));
  EXPECT_EQ(cli::parse_complex("-i"), Complex(0, -1));
  EXPECT_EQ(cli::parse_complex("1e-3+2e-1i"), Complex(1e-3, 0.2));
  EXPECT_EQ(cli::parse_complex("0.2,-0.4"), Complex(0.2, -0.4));
  EXPECT_THROW(cli::parse_complex("abc"), ValidationError);
  EXPECT_THROW(cli::parse_complex(""), ValidationError);
}

TEST(Report, CsvQuotingAndNan) {
  GridReport r;
  r.columns = {"a", "b,c", "d\"e"};
  r.rows = {{1.0, std::nan(""), 0.1}};
  EXPECT_EQ(to_csv(r), "a,\"b,c\",\"d\"\"e\"\r\n1,,0.1\r\n");
  EXPECT_NE(to_json(r).find("null"), std::string::npos);
  EXPECT_THROW(parse_format("xml"), ValidationError);
}

TEST_F(CliTest, Version) {
  const CliRun r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "curvlab/1\n");
}

TEST_F(CliTest, CurvatureBottAtZero) {
  const CliRun r = run({"curvature", frame("bott", bott_frame()), "--point", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  const auto cols = split_csv_line(header.substr(0, header.size() - 1));
  const auto vals = split_csv_line(row.substr(0, row.size() - 1));
  ASSERT_EQ(cols.size(), vals.size());
  EXPECT_EQ(cols[2], "K_0_0_0_0_re");
  EXPECT_EQ(std::stod(vals[2]), -1.0);
}

TEST_F(CliTest, CurvatureConstantAllZero) {
  const CliRun r = run({"curvature", frame("c", constant_frame(2)), "--point", "0.3",
                     "--order", "2"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  const auto vals = split_csv_line(line.substr(0, line.size() - 1));
  for (std::size_t k = 2; k < vals.size(); ++k) EXPECT_EQ(std::stod(vals[k]), 0.0);
}

TEST_F(CliTest, CurvatureHardyGridToFile) {
  const std::string out = path("k.csv");
  const CliRun r = run({"curvature", frame("h", hardy_frame(32)), "--grid", "0.6,0.1",
                     "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(fs::exists(out + ".meta.json"));
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    const auto v = split_csv_line(line.substr(0, line.size() - 1));
    const double r2 = std::norm(Complex(std::stod(v[0]), std::stod(v[1])));
    EXPECT_NEAR(std::stod(v[2]), -1.0 / ((1 - r2) * (1 - r2)), 1e-6);
    ++rows;
  }
  EXPECT_GT(rows, 100);
}

TEST_F(CliTest, CurvatureJsonAndDeterminism) {
  const std::string f = frame("b", bergman_frame(12));
  const CliRun a = run({"curvature", f, "--grid", "0.5,0.25", "--format", "json", "--order", "2"});
  const CliRun b = run({"curvature", f, "--grid", "0.5,0.25", "--format", "json", "--order", "2"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["meta"]["frame"]["N"], 12);
  EXPECT_EQ(doc["columns"].size(), 2u + 9u * 2u);
}

TEST_F(CliTest, CurvatureErrors) {
  EXPECT_EQ(run({"curvature", raw("bad.json", "{not json"), "--point", "0"}).code, 2);
  EXPECT_EQ(run({"curvature", frame("h", hardy_frame(8)), "--point", "1.5"}).code, 2);
  EXPECT_EQ(run({"curvature", frame("h", hardy_frame(8))}).code, 2);
  EXPECT_EQ(run({"curvature", frame("h", hardy_frame(8)), "--point", "0",
                 "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  // Columns e1 and e1 + (lambda - 0.5) e2 become parallel at lambda = 0.5,
  // which the probe grid misses.
  CMatrix c0(2, 2), c1(2, 2);
  c0 << 1, 1, 0, -0.5;
  c1 << 0, 0, 0, 1;
  const std::string pinched = frame("s", HolomorphicFrame("pinched", {c0, c1}, 1.0));
  const CliRun s = run({"curvature", pinched, "--point", "0.5000000001"});
  EXPECT_EQ(s.code, 3) << s.err;
  EXPECT_EQ(run({"curvature", pinched, "--point", "0.2"}).code, 0);
}

TEST_F(CliTest, VerifySuites) {
  for (const HolomorphicFrame& f : {bott_frame(), constant_frame(2)}) {
    const CliRun r = run({"verify", frame("f", f), "--suite", "all", "--points", "3"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  }
  const CliRun c = run({"verify", frame("c", constant_frame(2)), "--suite", "identities"});
  std::istringstream in(c.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    EXPECT_EQ(std::stod(split_csv_line(line)[6]), 0.0) << line;
  }
}

TEST_F(CliTest, VerifyNegativeControl) {
  const CliRun r = run({"verify", "--negative-control"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifyDeterministic) {
  const std::string f = frame("w", weighted_shift_frame({1, 2, 1, 2, 1, 2, 1}, 8));
  const CliRun a = run({"verify", f, "--seed", "7", "--suite", "claim2"});
  const CliRun b = run({"verify", f, "--seed", "7", "--suite", "claim2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"verify", f, "--seed", "8", "--suite", "claim2"}).out);
  EXPECT_EQ(run({"verify", f, "--suite", "nope"}).code, 2);
}

TEST_F(CliTest, CompareExitCodes) {
  const std::string bott = frame("bott", bott_frame());
  EXPECT_EQ(run({"compare", bott, bott}).code, 0);

  const CliRun d = run({"compare", frame("h", hardy_frame(24)), frame("b", bergman_frame(24)),
                     "--points", "0.5", "0.1+0.2i"});
  EXPECT_EQ(d.code, 4);
  const auto doc = nlohmann::json::parse(d.out);
  EXPECT_EQ(doc["verdicts"].size(), 4u);
  EXPECT_EQ(doc["verdicts"][0]["status"], "distinct");
  EXPECT_FALSE(doc["verdicts"][0]["witness"].is_null());

  // Gauge-twisted copies of a rank-2 curve share every trace word.
  const HolomorphicFrame f = direct_sum(hardy_frame(8), hardy_frame(8));
  CMatrix m0 = CMatrix::Identity(2, 2), m1 = CMatrix::Zero(2, 2);
  m1(0, 1) = 1.0;
  const std::string a = frame("a", f);
  const std::string b = frame("b2", right_multiply(f, {m0, m1}));
  EXPECT_EQ(run({"compare", a, b, "--points", "0.3", "--no-unitary-search"}).code, 5);
  EXPECT_EQ(run({"compare", a, b, "--points", "0.3"}).code, 0);
  EXPECT_EQ(run({"compare", a, b, "--method", "nope"}).code, 2);
}

TEST_F(CliTest, KtScan) {
  const std::string out = path("kt.json");
  const CliRun r = run({"ktscan", frame("h", hardy_frame(48)), "--radius", "0.6",
                     "--out", out, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(out);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_LT(doc["meta"]["summary"]["max_abs_g"].get<double>(), 1e-4);

  const CliRun c = run({"ktscan", frame("c", constant_frame(2)), "--radius", "0.5"});
  std::istringstream lines(c.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "re,im,hs2,g,laplacian\r");
  while (std::getline(lines, line)) {
    const auto v = split_csv_line(line.substr(0, line.size() - 1));
    const double r2 = std::norm(Complex(std::stod(v[0]), std::stod(v[1])));
    EXPECT_NEAR(std::stod(v[3]), -1.0 / ((1 - r2) * (1 - r2)), 1e-12);
  }
  EXPECT_EQ(run({"ktscan", frame("h2", hardy_frame(8)), "--radius", "1"}).code, 2);
}

TEST_F(CliTest, KtScanByteIdentical) {
  const std::string f = frame("b", bergman_frame(16));
  const CliRun a = run({"ktscan", f, "--radius", "0.4", "--step", "0.1"});
  const CliRun b = run({"ktscan", f, "--radius", "0.4", "--step", "0.1"});
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace curvlab
