// Copyright 2026 The ARNN Workbench Authors
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
#include <string>
#include <vector>

#include "arnn/cli/cli.h"
#include "arnn/util/text.h"

namespace arnn {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(ARNN_TEST_DATA) + "/" + name;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("arnn_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, index) {
  EXPECT_EQ(cli({"index", "--alphabet", "ab", "--string", "ab"}).out, "5\n");
  EXPECT_EQ(cli({"index", "--alphabet", "ab", "--index", "11"}).out, "abb\n");
  EXPECT_EQ(cli({"index", "--alphabet", "ab", "--string", ""}).out, "1\n");
  Outcome bad = cli({"index", "--alphabet", "ab", "--string", "ac"});
  EXPECT_EQ(bad.code, kExitDomain);
  EXPECT_EQ(bad.err.rfind("arnn: AlphabetError:", 0), 0u) << bad.err;
}

TEST_F(CliTest, encode_and_decode) {
  Outcome r = cli({"encode", "--language", data("L.lang"), "--digits", "25",
                   "--table", path("L.oracle")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0100100000100000000000100\n");
  EXPECT_EQ(read_file(path("L.oracle")), read_file(data("L25.oracle")));
  EXPECT_EQ(cli({"decode", "--table", path("L.oracle"), "--alphabet", "ab",
                 "--string", "ab"})
                .out,
            "1\n");
  EXPECT_EQ(cli({"decode", "--code", "0100100000100000000000100", "--alphabet",
                 "ab", "--string", "b"})
                .out,
            "0\n");
  Outcome beyond = cli({"decode", "--table", path("L.oracle"), "--alphabet",
                        "ab", "--string", "bbbb"});
  EXPECT_EQ(beyond.code, kExitDomain);
  EXPECT_NE(beyond.err.find("HorizonExceeded"), std::string::npos);
}

TEST_F(CliTest, compile_and_run_dfa) {
  EXPECT_EQ(cli({"compile-dfa", "--dfa", data("parity.dfa"), "--output",
                 path("parity.net")})
                .code,
            kExitOk);
  EXPECT_EQ(cli({"run", "--net", path("parity.net"), "--word", "b",
                 "--budget", "32"})
                .out,
            "reject\n");
  EXPECT_EQ(cli({"run", "--net", path("parity.net"), "--word", "bb",
                 "--budget", "32"})
                .out,
            "accept\n");
  EXPECT_EQ(cli({"run", "--net", path("parity.net"), "--word", "",
                 "--budget", "32"})
                .out,
            "accept\n");
  Outcome traced = cli({"run", "--net", path("parity.net"), "--word", "b",
                        "--budget", "32", "--trace"});
  EXPECT_EQ(traced.out,
            "tick 0 in 01 valid 1 out 0 valid 0\n"
            "tick 1 in 00 valid 0 out 0 valid 0\n"
            "tick 2 in 00 valid 0 out 0 valid 1\n"
            "reject\n");
  EXPECT_EQ(cli({"classify", "--net", path("parity.net")}).out,
            "AtMostBoundedAutomata\n");
}

TEST_F(CliTest, run_errors) {
  cli({"compile-dfa", "--dfa", data("parity.dfa"), "--output",
       path("parity.net")});
  Outcome timeout = cli({"run", "--net", path("parity.net"), "--word", "bb",
                         "--budget", "3"});
  EXPECT_EQ(timeout.code, kExitDomain);
  EXPECT_EQ(timeout.err.rfind("arnn: Timeout:", 0), 0u);
  Outcome small = cli({"run", "--net", path("parity.net"), "--word", "bb",
                       "--budget", "1"});
  EXPECT_EQ(small.code, kExitUsage);
  EXPECT_NE(small.err.find("ConfigError"), std::string::npos);
  Outcome missing = cli({"run", "--net", path("nope.net"), "--word", "b",
                         "--budget", "9"});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_EQ(cli({"run", "--net", path("parity.net")}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
}

TEST_F(CliTest, two_stack) {
  EXPECT_EQ(cli({"compile-two-stack", "--machine", data("anbn.tsm"),
                 "--output", path("anbn.net")})
                .code,
            kExitOk);
  for (const auto& [word, verdict] :
       std::vector<std::pair<std::string, std::string>>{
           {"aabb", "accept\n"}, {"aab", "reject\n"}, {"", "accept\n"}}) {
    EXPECT_EQ(cli({"run", "--net", path("anbn.net"), "--word", word,
                   "--budget", "200"})
                  .out,
              verdict);
  }
  EXPECT_EQ(cli({"classify", "--net", path("anbn.net")}).out, "AtMostTuring\n");
}

TEST_F(CliTest, oracle_net) {
  fs::copy_file(data("L25.oracle"), path("L25.oracle"));
  for (const char* flag : {"--packing", "--composed"}) {
    std::vector<std::string> args = {"build-oracle-net", "--table",
                                     path("L25.oracle"), "--alphabet", "ab",
                                     "--label", "0'", "--output",
                                     path("o.net")};
    if (std::string(flag) == "--composed") {
      args.push_back(flag);
    } else {
      args.push_back(flag);
      args.push_back("cantor4");
    }
    ASSERT_EQ(cli(args).code, kExitOk);
    EXPECT_NE(read_file(path("o.net")).find("oracle:L25.oracle:cantor4:0'"),
              std::string::npos);
    EXPECT_EQ(cli({"run", "--net", path("o.net"), "--word", "ab", "--budget",
                   "500"})
                  .out,
              "accept\n");
    EXPECT_EQ(cli({"run", "--net", path("o.net"), "--word", "b", "--budget",
                   "500"})
                  .out,
              "reject\n");
    Outcome beyond = cli({"run", "--net", path("o.net"), "--word", "bbbb",
                          "--budget", "5000"});
    EXPECT_EQ(beyond.code, kExitDomain);
    EXPECT_NE(beyond.err.find("HorizonExceeded"), std::string::npos);
    EXPECT_EQ(cli({"classify", "--net", path("o.net")}).out,
              "OracleDegrees(0')\n");
  }
  Outcome binary = cli({"build-oracle-net", "--table", path("L25.oracle"),
                        "--alphabet", "ab", "--packing", "binary",
                        "--output", path("b.net")});
  EXPECT_EQ(binary.code, kExitDomain);
  EXPECT_FALSE(fs::exists(path("b.net")));
}

TEST_F(CliTest, classify_with_timing_and_lattice) {
  cli({"compile-dfa", "--dfa", data("parity.dfa"), "--output",
       path("parity.net")});
  EXPECT_EQ(cli({"classify", "--net", path("parity.net"), "--timing", "0'"})
                .out,
            "OracleDegrees(0')\n");
  EXPECT_EQ(cli({"classify", "--net", path("parity.net"), "--timing", "a",
                 "--timing", "b", "--lattice", data("lattice.txt")})
                .out,
            "OracleDegrees(a, b)\n");
  Outcome unknown =
      cli({"classify", "--net", path("parity.net"), "--timing", "zz"});
  EXPECT_EQ(unknown.code, kExitDomain);
  EXPECT_NE(unknown.err.find("LatticeError"), std::string::npos);
}

TEST_F(CliTest, spikes) {
  Outcome enc = cli({"spike-encode", "--language", data("L.lang"), "--window",
                     "25", "--label", "0'", "--output", path("L.spikes")});
  EXPECT_EQ(enc.code, kExitOk);
  EXPECT_EQ(read_file(path("L.spikes")),
            "window 25\nlabel 0'\nspike 2\nspike 5\nspike 11\nspike 23\n");
  EXPECT_EQ(cli({"spike-decode", "--schedule", path("L.spikes")}).out,
            "0100100000100000000000100\n");
  EXPECT_EQ(cli({"spike-encode", "--code", "1000", "--window", "4"}).out,
            "window 4\nspike 1\n");
  EXPECT_EQ(cli({"spike-encode", "--code", "1000", "--language",
                 data("L.lang"), "--window", "4"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, byte_determinism) {
  std::vector<std::vector<std::string>> commands = {
      {"compile-two-stack", "--machine", data("anbn.tsm")},
      {"compile-dfa", "--dfa", data("parity.dfa")},
      {"encode", "--language", data("L.lang"), "--digits", "40"},
  };
  for (const auto& c : commands) {
    Outcome a = cli(c);
    Outcome b = cli(c);
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

TEST_F(CliTest, failures_leave_no_files) {
  Outcome r = cli({"encode", "--language", data("missing.lang"), "--digits",
                   "5", "--table", path("x.oracle")});
  EXPECT_NE(r.code, kExitOk);
  EXPECT_FALSE(fs::exists(path("x.oracle")));
  r = cli({"compile-dfa", "--dfa", data("anbn.tsm"), "--output",
           path("x.net")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(fs::exists(path("x.net")));
  EXPECT_TRUE(fs::is_empty(dir_));
}

}  // namespace
}  // namespace arnn
