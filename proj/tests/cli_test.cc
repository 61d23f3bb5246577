// Copyright 2026 The Combcontract Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "combcontract/generators.h"
#include "combcontract/instance_io.h"
#include "oracles.h"

namespace combcontract::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("combcontract_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    ::unsetenv("COMBCONTRACT_BRUTE_FORCE_LIMIT");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string WriteInstance(const std::string& name, const Instance& inst) {
    return Write(name, DumpJson(InstanceToJson(inst)));
  }

  fs::path dir_;
};

TEST_F(CliTest, SolveThreeActionTable) {
  const std::string f = WriteInstance("t.json", testing::ThreeActionTable());
  const Result r = RunCli({"solve", f});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("method: brute"), std::string::npos);
  EXPECT_NE(r.out.find("\n1/2    1/4      1/2    {1,2}\n"), std::string::npos)
      << r.out;
}

TEST_F(CliTest, CriticalSetRowsAreSortedByAlpha) {
  const std::string f = WriteInstance("a.json", testing::AdditiveExample());
  const Result r = RunCli({"--format", "csv", "critical-set", f});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("alpha,value,principal_utility,demand\n"
                       "1/5,1/2,2/5,{1}\n"
                       "1/2,9/10,9/20,\"{1,2}\"\n"),
            std::string::npos)
      << r.out;
}

TEST_F(CliTest, SearchSuccessorWithinQueryBudget) {
  const Instance single(SuccessFunction(Additive{{testing::Q(1, 2)}}),
                        {testing::Q(1, 4)}, BitPrecision(2));
  const std::string f = WriteInstance("s.json", single);
  const Result r = RunCli({"succ", "--method", "search", "--alpha", "0", f});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("queries: 5\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("query_bound: 5\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n0      1/2\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, OutputIsByteIdenticalAcrossRuns) {
  const std::string f = WriteInstance("t.json", testing::ThreeActionTable());
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"critical-set", f, "--decimal", "4"},
        std::vector<std::string>{"demand", f, "--alpha", "1/2"},
        std::vector<std::string>{"verify", f}}) {
    const Result a = RunCli(args);
    const Result b = RunCli(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, 0) << a.err;
  }
}

TEST_F(CliTest, DecimalAddsRoundedColumns) {
  const std::string f = WriteInstance("t.json", testing::ThreeActionTable());
  const Result r = RunCli({"critical-set", f, "--decimal", "3"});
  EXPECT_NE(r.out.find("alpha~"), std::string::npos);
  EXPECT_NE(r.out.find("0.333"), std::string::npos);
  EXPECT_NE(r.out.find("1/3"), std::string::npos);
}

TEST_F(CliTest, CorruptedTableExitsWithValidationFailure) {
  const std::string f = Write("bad.json", R"({
    "version": 1, "model": "binary", "n": 2, "class": "explicit-table",
    "params": {"values": ["0", "1/2", "3/4", "1/4"]},
    "costs": ["1/10", "1/10"]})");
  const Result r = RunCli({"verify", f});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("non-monotone"), std::string::npos) << r.err;
}

TEST_F(CliTest, VerifyCoverageTower) {
  const std::string f = Write("tower.json", "");
  ASSERT_EQ(RunCli({"gen", "--output", f, "coverage-tower", "--n", "3"}).code,
            0);
  const Result r = RunCli({"verify", f});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("7 critical values"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("gs-bound           n/a     not applicable (not "
                       "gs_certified)"),
            std::string::npos)
      << r.out;
}

TEST_F(CliTest, VerifyRandomGsInstancePasses) {
  const Result gen =
      RunCli({"gen", "random", "--class", "additive", "--n", "5", "--k", "8",
              "--seed", "42"});
  ASSERT_EQ(gen.code, 0);
  const std::string f = Write("r.json", gen.out);
  const Result r = RunCli({"verify", f});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("failed: 0"), std::string::npos);
  EXPECT_EQ(r.out.find("fail "), std::string::npos);
}

TEST_F(CliTest, GeneratedFilesRoundTrip) {
  const Result gen =
      RunCli({"gen", "random", "--class", "coverage", "--n", "4", "--k", "6",
              "--seed", "9"});
  ASSERT_EQ(gen.code, 0);
  EXPECT_EQ(*ParseInstance(gen.out).binary,
            SampleInstance(FunctionClass::kCoverage, 4, BitPrecision(6), 9));

  const Result ss = RunCli({"gen", "subset-sum", "--values", "3,5", "--target", "8"});
  ASSERT_EQ(ss.code, 0) << ss.err;
  const InstanceDocument doc = ParseInstance(ss.out);
  EXPECT_EQ(*doc.binary, GenSubsetSum({{3, 5}, 8}).instance);
  EXPECT_EQ(doc.generator["threshold"], "1/64");

  const Result tower =
      RunCli({"gen", "coverage-tower", "--n", "2", "--normalize"});
  ASSERT_EQ(tower.code, 0);
  EXPECT_EQ(*ParseInstance(tower.out).binary,
            Normalize(GenExponentialCoverage(2).top()));
}

TEST_F(CliTest, ResourceLimitExitsWithTwo) {
  const std::string f = WriteInstance("t.json", testing::ThreeActionTable());
  ::setenv("COMBCONTRACT_BRUTE_FORCE_LIMIT", "2", 1);
  const Result r = RunCli({"solve", f});
  ::unsetenv("COMBCONTRACT_BRUTE_FORCE_LIMIT");
  EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, UsageErrorsExitWithOne) {
  EXPECT_EQ(RunCli({}).code, 1);
  EXPECT_EQ(RunCli({"frobnicate"}).code, 1);
  const std::string f = WriteInstance("a.json", testing::AdditiveExample());
  EXPECT_EQ(RunCli({"solve", f, "--method", "fast"}).code, 1);
  EXPECT_EQ(RunCli({"demand", f, "--alpha", "3/2"}).code, 1);
  EXPECT_EQ(RunCli({"solve", (dir_ / "missing.json").string()}).code, 1);
  EXPECT_EQ(RunCli({"--help"}).code, 0);
}

TEST_F(CliTest, RobustCommands) {
  const std::string f = WriteInstance("t.json", testing::ThreeActionTable());
  const Result s = RunCli({"--format", "csv", "robust", "solve-linear", f});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("alpha,utility,value\n1/2,1/4,1/2\n"), std::string::npos)
      << s.out;

  const Result l = RunCli({"--format", "csv", "robust", "linearize", f,
                           "--contract", "0:1/10,3/5:1/2,1:1/2"});
  EXPECT_EQ(l.code, 0) << l.err;
  EXPECT_NE(l.out.find("\n2/3,"), std::string::npos) << l.out;
  EXPECT_NE(l.out.find(",yes\n"), std::string::npos);

  const Result g = RunCli({"gen", "general", "--n", "3", "--m", "3", "--seed", "4"});
  ASSERT_EQ(g.code, 0);
  const std::string gf = Write("g.json", g.out);
  EXPECT_EQ(RunCli({"robust", "solve-linear", gf}).code, 0);
  EXPECT_EQ(RunCli({"solve", gf}).code, 1);
}

TEST(ExitCodeTest, Mapping) {
  EXPECT_EQ(ExitCodeFor(ErrorKind::kValidation), 1);
  EXPECT_EQ(ExitCodeFor(ErrorKind::kParse), 1);
  EXPECT_EQ(ExitCodeFor(ErrorKind::kResource), 2);
  EXPECT_EQ(ExitCodeFor(ErrorKind::kInvariantViolation), 3);
}

TEST(Fnv1aTest, KnownVectors) {
  EXPECT_EQ(Fnv1a(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(Fnv1a("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(Fnv1a("foobar"), 0x85944171f73967e8ull);
}

}  // namespace
}  // namespace combcontract::cli
