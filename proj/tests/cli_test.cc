// Copyright 2026 The amrinfer Authors
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

#include "amrinfer/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support/exemplars.h"

namespace amrinfer {
namespace {

namespace fs = std::filesystem;
using testing::testdata_path;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "amrinfer");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("amrinfer_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    write("p1.amr",
          "# ::snt a scar on the knee is a kind of scar\n"
          "(s / scar :domain (s2 / scar :location (k / knee)))\n");
    write("p2.amr",
          "# ::snt a scar is an acquired characteristic\n"
          "(c / characteristic :ARG1-of (a / acquire-01) :domain (s / scar))\n");
    write("c.amr",
          "# ::snt a scar on the knee is an acquired characteristic\n"
          "(c / characteristic :ARG1-of (a / acquire-01)\n"
          "   :domain (s / scar :location (k / knee)))\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return path(name);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, ClassifyScar) {
  CliRun r = cli({"classify", "--p1", path("p1.amr"), "--p2", path("p2.amr"), "--c",
               path("c.amr")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "ARG-SUB");
  EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, ClassifyJson) {
  CliRun r = cli({"classify", "--p1", path("p1.amr"), "--p2", path("p2.amr"), "--c",
               path("c.amr"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["type"], "ARG-SUB");
  EXPECT_EQ(j["display_name"], "arg substitution");
  EXPECT_EQ(j["pivot"], 2);
}

TEST_F(CliTest, ClassifyWithoutSentencesUsesGraphText) {
  write("q1.amr", "(s / scar :domain (s2 / scar :location (k / knee)))\n");
  CliRun r = cli({"classify", "--p1", path("q1.amr"), "--p2", path("p2.amr"), "--c",
               path("c.amr")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST_F(CliTest, TransformUnsupported) {
  CliRun r = cli({"transform", "--p1", path("p1.amr"), "--p2", path("p2.amr"), "--type", "UNK"});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("UNK"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, TransformArgSub) {
  CliRun r = cli({"transform", "--p1", path("p1.amr"), "--p2", path("p2.amr"), "--type",
               "arg-sub", "--site", "s:s"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "(c / characteristic :ARG1-of (a / acquire-01) :domain (s / scar :location (k / "
            "knee)))\n");
}

TEST_F(CliTest, TransformUsageErrors) {
  EXPECT_EQ(cli({"transform", "--p1", path("p1.amr"), "--p2", path("p2.amr"), "--type",
                 "NOPE"})
                .code,
            kExitUsage);
  EXPECT_EQ(cli({"transform", "--p1", path("p1.amr"), "--p2", path("p2.amr"), "--type",
                 "ARG-SUB", "--site", "s"})
                .code,
            kExitUsage);
  EXPECT_EQ(cli({"transform", "--p1", path("p1.amr"), "--type", "ARG-SUB"}).code, kExitUsage);
}

TEST_F(CliTest, TransformNoBridgeIsDataError) {
  CliRun r = cli({"transform", "--p1", path("p1.amr"), "--p2", path("p2.amr"), "--type",
               "ARG-SUB", "--site", "k:c"});
  EXPECT_EQ(r.code, kExitData);
}

TEST_F(CliTest, Parse) {
  write("doc.amr",
        "# ::snt one\n(a / alpha\n  :ARG0 (b / beta))\n\n(c / gamma :ARG1-of (d / delta-01))\n");
  CliRun r = cli({"parse", path("doc.amr")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "(a / alpha :ARG0 (b / beta))\n(c / gamma :ARG1-of (d / delta-01))\n");
  write("bad.amr", "(a / alpha :ARG0 (b / beta)\n");
  CliRun bad = cli({"parse", path("bad.amr")});
  EXPECT_EQ(bad.code, kExitData);
  EXPECT_NE(bad.err.find("bad.amr"), std::string::npos) << bad.err;
}

TEST_F(CliTest, MissingFileIsDataError) {
  EXPECT_EQ(cli({"parse", path("nope.amr")}).code, kExitData);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"annotate"}).code, kExitUsage);
  EXPECT_EQ(cli({"annotate", "--input", "x", "--jobs", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"stats", "--input", "x", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(cli({"emit-prompts", "--input", testdata_path("exemplars.jsonl"), "--mode", "xp"})
                .code,
            kExitUsage);
  CliRun help = cli({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("annotate"), std::string::npos);
}

TEST_F(CliTest, AnnotateThenStats) {
  CliRun a = cli({"annotate", "--input", testdata_path("exemplars.jsonl"), "--output",
               path("ann.jsonl"), "--jobs", "3"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_TRUE(a.out.empty());
  CliRun s = cli({"stats", "--input", path("ann.jsonl"), "--format", "json"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  auto j = nlohmann::json::parse(s.out);
  EXPECT_EQ(j["total"], 11);
  EXPECT_EQ(j["gold_matches"], 11);
  for (const auto& row : j["rows"]) {
    EXPECT_EQ(row["count"], row["type"] == "PREM-COPY" ? 0 : 1) << row["type"];
  }
  CliRun text = cli({"stats", "--input", path("ann.jsonl")});
  EXPECT_NE(text.out.find("gold matches 11/11"), std::string::npos) << text.out;
}

TEST_F(CliTest, StatsClassifiesUnannotatedInput) {
  CliRun s = cli({"stats", "--input", testdata_path("exemplars.jsonl")});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_NE(s.out.find("total 11"), std::string::npos);
}

TEST_F(CliTest, AnnotateStrictAndLenient) {
  std::string good = slurp(testdata_path("exemplars.jsonl"));
  std::string text = good.substr(0, good.find('\n') + 1) + "{not json\n" +
                     good.substr(good.find('\n') + 1);
  write("dirty.jsonl", text);
  CliRun strict = cli({"annotate", "--input", path("dirty.jsonl"), "--strict", "--output",
                    path("s.jsonl")});
  EXPECT_EQ(strict.code, kExitData);
  EXPECT_NE(strict.err.find("line 2"), std::string::npos) << strict.err;
  CliRun lenient = cli({"annotate", "--input", path("dirty.jsonl")});
  EXPECT_EQ(lenient.code, kExitOk);
  EXPECT_NE(lenient.err.find("line 2"), std::string::npos);
  EXPECT_NE(lenient.err.find("1 skipped"), std::string::npos) << lenient.err;
  EXPECT_EQ(std::count(lenient.out.begin(), lenient.out.end(), '\n'), 11);
}

TEST_F(CliTest, EmitPromptsMatchesGoldens) {
  for (const char* mode : {"ep", "dp", "de", "none"}) {
    const std::string out = path(std::string("p.") + mode);
    CliRun r = cli({"emit-prompts", "--input", testdata_path("exemplars.jsonl"), "--mode", mode,
                 "--output", out});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(slurp(out),
              slurp(testdata_path(std::string("prompts/exemplars.") + mode + ".jsonl")))
        << mode;
  }
}

TEST_F(CliTest, EmitPromptsMissingType) {
  std::string good = slurp(testdata_path("exemplars.jsonl"));
  std::string first = good.substr(0, good.find('\n'));
  first = first.substr(0, first.find(", \"gold_type\"")) + "}\n";
  write("untyped.jsonl", first);
  EXPECT_EQ(cli({"emit-prompts", "--input", path("untyped.jsonl"), "--mode", "dp"}).code,
            kExitData);
  EXPECT_EQ(cli({"emit-prompts", "--input", path("untyped.jsonl"), "--mode", "none"}).code,
            kExitOk);
}

}  // namespace
}  // namespace amrinfer
