// Copyright 2026 The semspace Authors.
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

#include "semspace/bench.h"

#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <gtest/gtest.h>

namespace semspace::bench {
namespace {

std::unique_ptr<Space> synthetic_space(std::size_t concepts = 60) {
  SpaceOptions o;
  o.reaper_interval_ms = 0;
  auto space = std::make_unique<Space>(o);
  space->load_model(MetaModel::kRdfs,
                    build_concept_index(synthetic_taxonomy(concepts, 42)));
  return space;
}

const Verdict& verdict(const std::vector<Verdict>& vs, std::string_view name) {
  for (const auto& v : vs) {
    if (v.property == name) return v;
  }
  throw std::logic_error("missing verdict " + std::string(name));
}

TEST(Bench, WriteRowsHaveRequestedCounts) {
  auto space = synthetic_space();
  BenchConfig cfg;
  cfg.sizes = {1024, 64 * 1024};
  cfg.reps = 100;
  cfg.warmup = 5;
  auto report = run_bench(cfg, *space);
  ASSERT_EQ(report.rows.size(), 2u);
  for (const auto& r : report.rows) {
    EXPECT_EQ(r.op, BenchOp::kWrite);
    EXPECT_EQ(r.count, 100u);
    EXPECT_LE(r.p50_ms, r.p95_ms);
    EXPECT_GE(r.mean_ms, 0.0);
  }
  auto vs = check_properties(report, space->stats());
  EXPECT_TRUE(verdict(vs, "bookkeeping").passed()) << verdict(vs, "bookkeeping").detail;
  EXPECT_EQ(verdict(vs, "floor-monotonicity").status, VerdictStatus::kSkip);
}

TEST(Bench, SleepingOnLargePayloadsFailsSizeIndependence) {
  auto space = synthetic_space();
  BenchConfig cfg;
  cfg.sizes = {1024, 1u << 20};
  cfg.reps = 20;
  cfg.warmup = 0;
  BenchHooks hooks;
  hooks.before_op = [](BenchOp, std::size_t size) {
    if (size > 1024) std::this_thread::sleep_for(std::chrono::milliseconds(2));
  };
  auto report = run_bench(cfg, *space, hooks);
  auto v = verdict(check_properties(report, space->stats()), "size-independence");
  EXPECT_EQ(v.status, VerdictStatus::kFail) << v.detail;
}

TEST(Bench, ReadCountsAreMonotoneAndPredicted) {
  auto space = synthetic_space();
  BenchConfig cfg;
  cfg.op = BenchOp::kRead;
  cfg.sizes = {256};
  cfg.threads = {1, 2};
  cfg.floors = {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
  cfg.reps = 10;
  cfg.warmup = 1;
  cfg.entries = 500;
  auto report = run_bench(cfg, *space);
  EXPECT_EQ(report.rows.size(), 14u);
  auto vs = check_properties(report, space->stats());
  EXPECT_EQ(verdict(vs, "floor-monotonicity").status, VerdictStatus::kPass)
      << verdict(vs, "floor-monotonicity").detail;
  EXPECT_TRUE(verdict(vs, "bookkeeping").passed());
  EXPECT_EQ(report.floors.front().observed, 500u);
  EXPECT_EQ(space->stats().live_entries, 0u);
}

TEST(Bench, ManipulatedCountFailsMonotonicity) {
  BenchReport report;
  report.floors = {{1, 1, 0.1, 5, 5, true}, {1, 1, 0.5, 7, 7, true}};
  auto v = verdict(check_properties(report, {}), "floor-monotonicity");
  EXPECT_EQ(v.status, VerdictStatus::kFail);
  report.floors = {{1, 1, 0.1, 5, 6, true}};
  EXPECT_EQ(verdict(check_properties(report, {}), "floor-monotonicity").status,
            VerdictStatus::kFail);
}

TEST(Bench, TakesAreExclusive) {
  auto space = synthetic_space();
  BenchConfig cfg;
  cfg.op = BenchOp::kTake;
  cfg.sizes = {128};
  cfg.threads = {1, 4};
  cfg.reps = 30;
  cfg.warmup = 3;
  cfg.entries = 400;
  auto report = run_bench(cfg, *space);
  ASSERT_EQ(report.takes.size(), 2u);
  for (const auto& t : report.takes) {
    EXPECT_EQ(t.taken, 400u);
    EXPECT_EQ(t.distinct_ids, 400u);
  }
  auto vs = check_properties(report, space->stats());
  EXPECT_EQ(verdict(vs, "take-exclusivity").status, VerdictStatus::kPass);
  EXPECT_TRUE(verdict(vs, "bookkeeping").passed());
}

TEST(Bench, CsvRoundTrip) {
  BenchReport report;
  report.rows = {{BenchOp::kWrite, 1024, 1, 0.0, 100, 0.001234, 0.001, 0.0025},
                 {BenchOp::kRead, 8u << 20, 4, 0.5, 200, 1.5, 1.25, 3.0 / 7.0}};
  std::stringstream s;
  write_csv(report, s);
  EXPECT_EQ(s.str().substr(0, kCsvHeader.size()), kCsvHeader);
  EXPECT_EQ(read_csv(s), report.rows);
}

TEST(Bench, EmptyReportIsHeaderOnly) {
  std::stringstream s;
  write_csv(BenchReport{}, s);
  EXPECT_EQ(s.str(), std::string(kCsvHeader) + "\n");
  EXPECT_TRUE(read_csv(s).empty());
}

TEST(Bench, MalformedCsvIsRejected) {
  std::stringstream bad_header("a,b,c\n");
  EXPECT_THROW(read_csv(bad_header), std::invalid_argument);
  std::stringstream bad_row(std::string(kCsvHeader) + "\nwrite,1,1,0,x,1,1,1\n");
  EXPECT_THROW(read_csv(bad_row), std::invalid_argument);
}

TEST(Bench, ValidateRejectsBadConfig) {
  BenchConfig cfg;
  cfg.reps = 0;
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.op = BenchOp::kRead;
  cfg.floors = {1.5};
  EXPECT_THROW(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.threads = {0};
  EXPECT_THROW(validate(cfg), std::invalid_argument);
}

TEST(Bench, SyntheticTaxonomyIsDeterministicDag) {
  auto a = synthetic_taxonomy(200, 7);
  auto b = synthetic_taxonomy(200, 7);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
  EXPECT_GT(a.size(), 199u);
  auto index = build_concept_index(a);
  EXPECT_EQ(index.size(), 200u);
}

}  // namespace
}  // namespace semspace::bench
