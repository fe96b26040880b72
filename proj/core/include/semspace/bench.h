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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semspace/concept.h"
#include "semspace/meta_model.h"
#include "semspace/space.h"

namespace semspace::bench {

enum class BenchOp { kWrite, kRead, kTake };

std::string_view to_string(BenchOp op);
std::optional<BenchOp> parse_bench_op(std::string_view name);

struct BenchConfig {
  BenchOp op = BenchOp::kWrite;
  std::vector<std::size_t> sizes{1024, 8u << 20};
  std::vector<int> threads{1};
  // Only read cells iterate floors; write and take rows carry floor 0.
  std::vector<double> floors{0.5};
  int reps = 100;
  int warmup = 10;
  std::uint64_t seed = 42;
  // Entries pre-populated for read and take cells.
  std::size_t entries = 3430;
  MetaModel model = MetaModel::kRdfs;
  // Read query concept; picked from the index by seed when unset.
  std::optional<std::string> query_concept;
  std::string out;
};

// Throws std::invalid_argument naming the offending field.
void validate(const BenchConfig& cfg);

struct BenchRow {
  BenchOp op;
  std::size_t size_bytes;
  int threads;
  double floor;
  std::size_t count;
  double mean_ms;
  double p50_ms;
  double p95_ms;

  friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

// Per read cell: the result count every read returned, and what
// matching_concepts says it should be.
struct FloorObservation {
  std::size_t size_bytes;
  int threads;
  double floor;
  std::size_t observed;
  std::size_t predicted;
  // All reads in the cell agreed on `observed`.
  bool stable;
};

// Per take cell: total removed across warmup, measured and drain takes.
struct TakeObservation {
  std::size_t size_bytes;
  int threads;
  std::size_t populated;
  std::size_t taken;
  std::size_t distinct_ids;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<FloorObservation> floors;
  std::vector<TakeObservation> takes;
  std::string query_concept;
  SpaceStats before;
  std::uint64_t bench_writes = 0;
  std::uint64_t bench_taken = 0;
  std::string environment;
};

// Called inside the timed region before every measured operation.
struct BenchHooks {
  std::function<void(BenchOp, std::size_t size_bytes)> before_op;
};

// `space` must have cfg.model loaded. Writes use the space's maximum lease.
BenchReport run_bench(const BenchConfig& cfg, Space& space,
                      const BenchHooks& hooks = {});

// Median write latency at the largest size over median at the smallest,
// at the smallest thread count, must not exceed this.
inline constexpr double kSizeIndependenceFactor = 5.0;

enum class VerdictStatus { kPass, kFail, kSkip };

struct Verdict {
  std::string property;
  VerdictStatus status;
  std::string detail;

  bool passed() const { return status != VerdictStatus::kFail; }
};

std::vector<Verdict> check_properties(const BenchReport& report,
                                      const SpaceStats& after);

inline constexpr std::string_view kCsvHeader =
    "op,size_bytes,threads,floor,count,mean_ms,p50_ms,p95_ms";

void write_csv(const BenchReport& report, std::ostream& out);
// Throws Error(kIo).
void write_csv(const BenchReport& report, const std::string& path);
// Throws std::invalid_argument on a malformed document.
std::vector<BenchRow> read_csv(std::istream& in);

// Deterministic taxonomy for benches: a random tree of `concepts` nodes in
// which roughly one node in ten gets a second parent.
PairList synthetic_taxonomy(std::size_t concepts, std::uint64_t seed);

}  // namespace semspace::bench
