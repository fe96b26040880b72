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

#include <sys/utsname.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <istream>
#include <latch>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "semspace/error.h"
#include "semspace/similarity.h"

namespace semspace::bench {
namespace {

using Latencies = std::vector<double>;

double percentile(Latencies sorted, double p) {
  if (sorted.empty()) return 0.0;
  std::sort(sorted.begin(), sorted.end());
  auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * sorted.size()));
  return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

BenchRow summarize(BenchOp op, std::size_t size, int threads, double floor,
                   const Latencies& ms) {
  double mean = ms.empty() ? 0.0
                           : std::accumulate(ms.begin(), ms.end(), 0.0) / ms.size();
  return {op, size, threads, floor, ms.size(), mean, percentile(ms, 50),
          percentile(ms, 95)};
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                  std::uint64_t c = 0) {
  std::seed_seq seq{seed, a, b, c};
  std::uint64_t out[1];
  seq.generate(reinterpret_cast<std::uint32_t*>(out),
               reinterpret_cast<std::uint32_t*>(out) + 2);
  return out[0];
}

Payload deterministic_payload(std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(mix(seed, size, 0x70a1));
  std::string bytes(size, '\0');
  std::size_t i = 0;
  for (; i + 8 <= size; i += 8) {
    std::uint64_t v = rng();
    for (int k = 0; k < 8; ++k) bytes[i + k] = static_cast<char>(v >> (8 * k));
  }
  std::uint64_t v = rng();
  for (int k = 0; i < size; ++i, ++k) bytes[i] = static_cast<char>(v >> (8 * k));
  return make_payload(std::move(bytes));
}

// Splits `total` operations over `workers` and runs fn(worker, op_index)
// for each, timing every call. All workers start together.
template <typename Fn>
Latencies run_workers(int workers, int total, Fn&& fn) {
  std::vector<Latencies> per_worker(workers);
  std::latch start(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    int ops = total / workers + (w < total % workers ? 1 : 0);
    pool.emplace_back([&, w, ops] {
      auto& out = per_worker[w];
      out.reserve(ops);
      start.arrive_and_wait();
      for (int i = 0; i < ops; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn(w, i);
        auto t1 = std::chrono::steady_clock::now();
        out.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      }
    });
  }
  for (auto& t : pool) t.join();
  Latencies all;
  for (auto& l : per_worker) all.insert(all.end(), l.begin(), l.end());
  return all;
}

std::string environment_note() {
  std::ostringstream os;
  utsname u{};
  if (uname(&u) == 0) os << u.sysname << ' ' << u.release << ' ' << u.machine;
  os << "; cpus=" << std::thread::hardware_concurrency();
  std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  os << "; " << stamp;
  return os.str();
}

class Runner {
 public:
  Runner(const BenchConfig& cfg, Space& space, const BenchHooks& hooks)
      : cfg_(cfg), space_(space), hooks_(hooks) {
    index_ = space_.index(cfg_.model);
    if (!index_ || index_->size() == 0) {
      throw Error(ErrorCode::kModelNotLoaded,
                  "bench needs a non-empty ontology loaded for " +
                      std::string(to_string(cfg_.model)));
    }
    for (const auto& e : index_->entries()) concepts_.push_back(e.concept_id);
    lease_ = space_.options().max_lease_ms;
  }

  BenchReport run() {
    report_.before = space_.stats();
    report_.environment = environment_note();
    switch (cfg_.op) {
      case BenchOp::kWrite: run_writes(); break;
      case BenchOp::kRead: run_reads(); break;
      case BenchOp::kTake: run_takes(); break;
    }
    return std::move(report_);
  }

 private:
  void before(std::size_t size) const {
    if (hooks_.before_op) hooks_.before_op(cfg_.op, size);
  }

  Payload payload_for(std::size_t size) {
    auto it = payloads_.find(size);
    if (it == payloads_.end()) {
      it = payloads_.emplace(size, deterministic_payload(size, cfg_.seed)).first;
    }
    return it->second;
  }

  const ConceptId& pick(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> d(0, concepts_.size() - 1);
    return concepts_[d(rng)];
  }

  // Writes cfg.entries entries of `size` bytes; returns entries per concept.
  std::map<ConceptId, std::size_t> populate(std::size_t size) {
    std::map<ConceptId, std::size_t> per_concept;
    std::mt19937_64 rng(mix(cfg_.seed, size, 0x909));
    Payload payload = payload_for(size);
    for (std::size_t k = 0; k < cfg_.entries; ++k) {
      const ConceptId& c = pick(rng);
      space_.write(payload, cfg_.model, c, lease_);
      ++per_concept[c];
    }
    report_.bench_writes += cfg_.entries;
    return per_concept;
  }

  std::size_t take_all() {
    std::size_t n = 0;
    for (const auto& c : concepts_) n += space_.take(cfg_.model, c).size();
    report_.bench_taken += n;
    return n;
  }

  void run_writes() {
    for (std::size_t size : cfg_.sizes) {
      Payload payload = payload_for(size);
      for (int threads : cfg_.threads) {
        std::mt19937_64 warm_rng(mix(cfg_.seed, size, threads, 0xa11));
        for (int i = 0; i < cfg_.warmup; ++i) {
          space_.write(payload, cfg_.model, pick(warm_rng), lease_);
          ++report_.bench_writes;
        }
        std::vector<std::mt19937_64> rngs;
        for (int w = 0; w < threads; ++w) rngs.emplace_back(mix(cfg_.seed, size, threads, w + 1));
        auto ms = run_workers(threads, cfg_.reps, [&](int w, int) {
          before(size);
          space_.write(payload, cfg_.model, pick(rngs[w]), lease_);
        });
        report_.bench_writes += ms.size();
        report_.rows.push_back(summarize(BenchOp::kWrite, size, threads, 0.0, ms));
      }
    }
  }

  ConceptId query_concept() {
    if (cfg_.query_concept) {
      ConceptId c(*cfg_.query_concept);
      index_->at(c);
      return c;
    }
    std::mt19937_64 rng(mix(cfg_.seed, 0x9e));
    return pick(rng);
  }

  void run_reads() {
    ConceptId query = query_concept();
    report_.query_concept = query.uri();
    for (std::size_t size : cfg_.sizes) {
      auto per_concept = populate(size);
      for (int threads : cfg_.threads) {
        for (double floor : cfg_.floors) {
          std::size_t predicted = 0;
          for (const auto& m : matching_concepts(*index_, query, floor)) {
            auto it = per_concept.find(m.concept_id);
            if (it != per_concept.end()) predicted += it->second;
          }
          SemanticQuery q{cfg_.model, query, floor};
          for (int i = 0; i < cfg_.warmup; ++i) space_.read(q);
          std::vector<std::vector<std::size_t>> counts(threads);
          auto ms = run_workers(threads, cfg_.reps, [&](int w, int) {
            before(size);
            counts[w].push_back(space_.read(q).size());
          });
          std::set<std::size_t> distinct;
          for (const auto& c : counts) distinct.insert(c.begin(), c.end());
          report_.floors.push_back({size, threads, floor,
                                    distinct.empty() ? 0 : *distinct.begin(),
                                    predicted, distinct.size() <= 1});
          report_.rows.push_back(summarize(BenchOp::kRead, size, threads, floor, ms));
        }
      }
      take_all();
    }
  }

  void run_takes() {
    const std::size_t k = concepts_.size();
    for (std::size_t size : cfg_.sizes) {
      for (int threads : cfg_.threads) {
        populate(size);
        std::vector<std::size_t> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(),
                     std::mt19937_64(mix(cfg_.seed, size, threads, 0x7a)));

        std::set<EntryId> ids;
        std::size_t taken = 0;
        auto record = [&](const ResultsList& results) {
          std::lock_guard lock(mu_);
          taken += results.size();
          for (const auto& r : results) ids.insert(r.id);
        };
        for (int i = 0; i < cfg_.warmup; ++i) {
          record(space_.take(cfg_.model, concepts_[order[i % k]]));
        }
        // Workers start at staggered offsets so they also collide.
        const std::size_t stride = std::max<std::size_t>(1, k / threads);
        auto ms = run_workers(threads, cfg_.reps, [&](int w, int i) {
          const ConceptId& c = concepts_[order[(w * stride + i) % k]];
          before(size);
          auto results = space_.take(cfg_.model, c);
          record(results);
        });
        for (const auto& c : concepts_) record(space_.take(cfg_.model, c));

        report_.bench_taken += taken;
        report_.takes.push_back({size, threads, cfg_.entries, taken, ids.size()});
        report_.rows.push_back(summarize(BenchOp::kTake, size, threads, 0.0, ms));
      }
    }
  }

  const BenchConfig& cfg_;
  Space& space_;
  const BenchHooks& hooks_;
  std::shared_ptr<const ConceptIndex> index_;
  std::vector<ConceptId> concepts_;
  Millis lease_ = 0;
  std::map<std::size_t, Payload> payloads_;
  std::mutex mu_;
  BenchReport report_;
};

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

template <typename T>
T parse_number(std::string_view s, const char* what) {
  T v{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw std::invalid_argument(std::string("bad CSV ") + what + ": '" +
                                std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string_view to_string(BenchOp op) {
  switch (op) {
    case BenchOp::kWrite: return "write";
    case BenchOp::kRead: return "read";
    case BenchOp::kTake: return "take";
  }
  return "write";
}

std::optional<BenchOp> parse_bench_op(std::string_view name) {
  if (name == "write") return BenchOp::kWrite;
  if (name == "read") return BenchOp::kRead;
  if (name == "take") return BenchOp::kTake;
  return std::nullopt;
}

void validate(const BenchConfig& cfg) {
  if (cfg.reps < 1) throw std::invalid_argument("reps must be at least 1");
  if (cfg.warmup < 0) throw std::invalid_argument("warmup must be non-negative");
  if (cfg.sizes.empty()) throw std::invalid_argument("sizes must not be empty");
  if (cfg.threads.empty()) throw std::invalid_argument("threads must not be empty");
  for (auto s : cfg.sizes) {
    if (s < 1) throw std::invalid_argument("sizes must be at least 1 byte");
  }
  for (auto t : cfg.threads) {
    if (t < 1) throw std::invalid_argument("thread counts must be at least 1");
  }
  if (cfg.op == BenchOp::kRead) {
    if (cfg.floors.empty()) throw std::invalid_argument("floors must not be empty");
    for (double f : cfg.floors) {
      if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("floors must be in [0, 1]");
    }
  }
}

BenchReport run_bench(const BenchConfig& cfg, Space& space,
                      const BenchHooks& hooks) {
  validate(cfg);
  return Runner(cfg, space, hooks).run();
}

std::vector<Verdict> check_properties(const BenchReport& report,
                                      const SpaceStats& after) {
  std::vector<Verdict> out;
  std::ostringstream detail;

  // (a) size independence of write latency.
  {
    std::vector<const BenchRow*> writes;
    for (const auto& r : report.rows) {
      if (r.op == BenchOp::kWrite) writes.push_back(&r);
    }
    if (writes.empty()) {
      out.push_back({"size-independence", VerdictStatus::kSkip, "no write rows"});
    } else {
      int min_threads = (*std::min_element(writes.begin(), writes.end(), [](auto a, auto b) {
                          return a->threads < b->threads;
                        }))->threads;
      const BenchRow* small = nullptr;
      const BenchRow* large = nullptr;
      for (const auto* r : writes) {
        if (r->threads != min_threads) continue;
        if (!small || r->size_bytes < small->size_bytes) small = r;
        if (!large || r->size_bytes > large->size_bytes) large = r;
      }
      if (small->size_bytes == large->size_bytes) {
        out.push_back({"size-independence", VerdictStatus::kSkip, "only one size"});
      } else {
        double ratio = large->p50_ms / std::max(small->p50_ms, 1e-9);
        detail.str({});
        detail << "median " << format_double(large->p50_ms) << "ms at "
               << large->size_bytes << "B vs " << format_double(small->p50_ms)
               << "ms at " << small->size_bytes << "B, ratio " << format_double(ratio)
               << " (limit " << kSizeIndependenceFactor << ")";
        out.push_back({"size-independence",
                       ratio <= kSizeIndependenceFactor ? VerdictStatus::kPass
                                                        : VerdictStatus::kFail,
                       detail.str()});
      }
    }
  }

  // (b) result counts never rise with the floor and match the prediction.
  if (report.floors.empty()) {
    out.push_back({"floor-monotonicity", VerdictStatus::kSkip, "no read cells"});
  } else {
    std::map<std::pair<std::size_t, int>, std::vector<const FloorObservation*>> groups;
    for (const auto& f : report.floors) groups[{f.size_bytes, f.threads}].push_back(&f);
    bool ok = true;
    detail.str({});
    for (auto& [key, obs] : groups) {
      std::sort(obs.begin(), obs.end(), [](auto a, auto b) { return a->floor < b->floor; });
      for (std::size_t i = 0; i < obs.size(); ++i) {
        const auto& o = *obs[i];
        if (!o.stable || o.observed != o.predicted) {
          ok = false;
          detail << "floor " << format_double(o.floor) << ": observed " << o.observed
                 << " predicted " << o.predicted << (o.stable ? "" : " (unstable)") << "; ";
        }
        if (i > 0 && o.observed > obs[i - 1]->observed) {
          ok = false;
          detail << "count rose from " << obs[i - 1]->observed << " to " << o.observed
                 << " at floor " << format_double(o.floor) << "; ";
        }
      }
    }
    if (ok) detail << "counts non-increasing and equal to predictions";
    out.push_back({"floor-monotonicity", ok ? VerdictStatus::kPass : VerdictStatus::kFail,
                   detail.str()});
  }

  // (c) bookkeeping.
  {
    bool balanced = after.total_writes - after.total_takes - after.expired_total ==
                    after.live_entries;
    std::uint64_t expired_during = after.expired_total - report.before.expired_total;
    bool reconciled = after.live_entries + expired_during ==
                      report.before.live_entries + report.bench_writes - report.bench_taken;
    detail.str({});
    detail << "live " << after.live_entries << ", writes " << after.total_writes << ", takes "
           << after.total_takes << ", expired " << after.expired_total << ", bench wrote "
           << report.bench_writes << " took " << report.bench_taken;
    out.push_back({"bookkeeping",
                   balanced && reconciled ? VerdictStatus::kPass : VerdictStatus::kFail,
                   detail.str()});
  }

  if (report.takes.empty()) {
    out.push_back({"take-exclusivity", VerdictStatus::kSkip, "no take cells"});
  } else {
    bool ok = true;
    detail.str({});
    for (const auto& t : report.takes) {
      bool cell = t.taken == t.populated && t.distinct_ids == t.populated;
      ok &= cell;
      detail << t.size_bytes << "B/" << t.threads << "t: " << t.taken << " taken, "
             << t.distinct_ids << " distinct of " << t.populated << "; ";
    }
    out.push_back({"take-exclusivity", ok ? VerdictStatus::kPass : VerdictStatus::kFail,
                   detail.str()});
  }
  return out;
}

void write_csv(const BenchReport& report, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& r : report.rows) {
    out << to_string(r.op) << ',' << r.size_bytes << ',' << r.threads << ','
        << format_double(r.floor) << ',' << r.count << ',' << format_double(r.mean_ms)
        << ',' << format_double(r.p50_ms) << ',' << format_double(r.p95_ms) << '\n';
  }
}

void write_csv(const BenchReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path, path);
  write_csv(report, out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path, path);
}

std::vector<BenchRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("missing or wrong CSV header");
  }
  std::vector<BenchRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> cells;
    std::string_view rest = line;
    for (;;) {
      auto comma = rest.find(',');
      cells.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (cells.size() != 8) throw std::invalid_argument("CSV row needs 8 cells: " + line);
    auto op = parse_bench_op(cells[0]);
    if (!op) throw std::invalid_argument("bad CSV op: " + std::string(cells[0]));
    rows.push_back({*op, parse_number<std::size_t>(cells[1], "size_bytes"),
                    parse_number<int>(cells[2], "threads"),
                    parse_number<double>(cells[3], "floor"),
                    parse_number<std::size_t>(cells[4], "count"),
                    parse_number<double>(cells[5], "mean_ms"),
                    parse_number<double>(cells[6], "p50_ms"),
                    parse_number<double>(cells[7], "p95_ms")});
  }
  return rows;
}

PairList synthetic_taxonomy(std::size_t concepts, std::uint64_t seed) {
  auto name = [](std::size_t k) {
    return ConceptId("urn:semspace:bench:C" + std::to_string(k));
  };
  PairList pairs;
  std::mt19937_64 rng(mix(seed, concepts, 0x7a40));
  for (std::size_t k = 1; k < concepts; ++k) {
    std::uniform_int_distribution<std::size_t> parent(0, k - 1);
    std::size_t first = parent(rng);
    pairs.add(name(k), name(first));
    if (k > 1 && std::uniform_int_distribution<int>(0, 9)(rng) == 0) {
      std::size_t second = parent(rng);
      if (second != first) pairs.add(name(k), name(second));
    }
  }
  return pairs;
}

}  // namespace semspace::bench
