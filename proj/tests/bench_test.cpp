// Copyright 2026 The mpfjss Authors
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


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mpfjss/bench.hpp"
#include "mpfjss/instance_io.hpp"
#include "support/test_support.hpp"

namespace mpfjss {
namespace {

namespace fs = std::filesystem;

class BenchDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mpfjss-bench-" + std::to_string(::testing::UnitTest::GetInstance()
                                                 ->random_seed()) +
            "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
  }

  fs::path dir_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

constexpr const char* kHeader =
    "instance,jobs,strategy,verdict,search_s,opt_s,total_tardiness,cap";

TEST_F(BenchDir, EmptyDirectoryGivesHeaderOnly) {
  const auto files = list_instances(dir_);
  EXPECT_TRUE(files.empty());
  EXPECT_EQ(lines(to_csv(run_bench(files, {}))),
            std::vector<std::string>{kHeader});
  EXPECT_THROW(list_instances(dir_ / "nope"), std::invalid_argument);
}

TEST_F(BenchDir, RowsPerInstanceAndStrategy) {
  write("b-example.lp", to_facts(testing::example_instance()));
  write("a-tiny.json", to_json_text(testing::random_tiny_instance(4)));
  write("c-broken.lp", "op(a,1)");
  write("notes.txt", "ignored");
  const auto files = list_instances(dir_);
  ASSERT_EQ(files.size(), 3u);

  BenchOptions opt;
  opt.strategies = {Strategy::kIncremental, Strategy::kExponential,
                    Strategy::kSingle};
  opt.window = 2;
  opt.timeout_seconds = 10;
  const auto rows = run_bench(files, opt);
  ASSERT_EQ(rows.size(), 9u);

  // Ordered by job count, then name, then strategy as listed.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(rows[i - 1].jobs, rows[i].jobs);
  }
  for (const auto& r : rows) {
    EXPECT_GE(r.search_s, 0.0);
    EXPECT_GE(r.opt_s, 0.0);
    if (r.instance == "c-broken.lp") {
      EXPECT_EQ(r.verdict, "error");
      EXPECT_FALSE(r.error.empty());
      EXPECT_FALSE(r.total_tardiness);
    } else if (r.instance == "b-example.lp") {
      EXPECT_EQ(r.jobs, 3);
      EXPECT_EQ(r.verdict, "optimal");
      EXPECT_EQ(r.total_tardiness, 1);
      const Minutes want = r.strategy == Strategy::kSingle        ? 9
                           : r.strategy == Strategy::kIncremental ? 2
                                                                  : 1;
      EXPECT_EQ(r.cap, want);
    } else {
      EXPECT_EQ(r.verdict, "optimal");
    }
  }
  const auto csv = lines(to_csv(rows));
  ASSERT_EQ(csv.size(), 10u);
  EXPECT_EQ(csv[0], kHeader);
  const auto json = nlohmann::json::parse(to_json_text(rows));
  EXPECT_EQ(json.size(), 9u);

  // Verdicts, caps and tardiness do not depend on scheduling of the sweep.
  opt.parallel = 4;
  const auto again = run_bench(files, opt);
  ASSERT_EQ(again.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(again[i].instance, rows[i].instance);
    EXPECT_EQ(again[i].strategy, rows[i].strategy);
    EXPECT_EQ(again[i].verdict, rows[i].verdict);
    EXPECT_EQ(again[i].cap, rows[i].cap);
    EXPECT_EQ(again[i].total_tardiness, rows[i].total_tardiness);
  }
}

TEST_F(BenchDir, ZeroTimeoutIsRecordedNotFatal) {
  write("example.lp", to_facts(testing::example_instance()));
  BenchOptions opt;
  opt.timeout_seconds = 0;
  const auto rows = run_bench(list_instances(dir_), opt);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NE(rows[0].verdict, "optimal");
  EXPECT_NE(rows[0].verdict, "error");
}

TEST(BenchCsv, FormatsMissingValuesAsEmpty) {
  BenchRecord r;
  r.instance = "x.lp";
  r.jobs = 4;
  r.strategy = Strategy::kIncremental;
  r.verdict = "bound-not-found";
  r.search_s = 1.5;
  EXPECT_EQ(lines(to_csv({r}))[1], "x.lp,4,inc,bound-not-found,1.500,0.000,,");
  r.total_tardiness = 12;
  r.cap = 40;
  EXPECT_EQ(lines(to_csv({r}))[1], "x.lp,4,inc,bound-not-found,1.500,0.000,12,40");
}

}  // namespace
}  // namespace mpfjss
