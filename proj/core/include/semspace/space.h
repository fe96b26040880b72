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

#include <array>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "semspace/concept.h"
#include "semspace/concept_index.h"
#include "semspace/meta_model.h"
#include "semspace/path_key.h"

namespace semspace {

using EntryId = std::uint64_t;
// Milliseconds since the Unix epoch, or a duration in milliseconds.
using Millis = std::int64_t;
using Clock = std::function<Millis()>;

Millis system_clock_ms();

// Immutable payload bytes shared between the space and its readers.
using Payload = std::shared_ptr<const std::string>;

inline Payload make_payload(std::string bytes) {
  return std::make_shared<const std::string>(std::move(bytes));
}

struct MetaInformation {
  MetaModel model;
  ConceptId concept_id;
  std::vector<PathKey> path_keys;
  std::string identifier;
};

struct Lease {
  Millis requested_ms = 0;
  Millis granted_ms = 0;
  Millis expires_at_ms = 0;
};

struct InformationEntity {
  EntryId id = 0;
  Payload payload;
  MetaInformation meta;
  Lease lease;
};

struct SemanticQuery {
  MetaModel model;
  ConceptId concept_id;
  double floor;
};

struct SyntacticQuery {
  std::string identifier;
};

struct Result {
  EntryId id;
  ConceptId concept_id;
  double degree;
  Payload payload;
  std::string identifier;
};

// Degree descending, then id (write order) ascending.
using ResultsList = std::vector<Result>;

struct WriteReceipt {
  EntryId id;
  Lease lease;
  std::string identifier;
};

struct SpaceStats {
  // Stored entries, including expired ones the reaper has not removed yet,
  // so that total_writes - total_takes - expired_total == live_entries.
  std::uint64_t live_entries = 0;
  std::map<MetaModel, std::uint64_t> entries_per_model;
  std::uint64_t total_writes = 0;
  // read and read_by_id calls.
  std::uint64_t total_reads = 0;
  // Entries removed by take.
  std::uint64_t total_takes = 0;
  std::uint64_t expired_total = 0;
};

struct SpaceOptions {
  Millis max_lease_ms = 3'600'000;
  // 0 disables the background reaper; expiry is still enforced on reads.
  Millis reaper_interval_ms = 1'000;
  // Defaults to system_clock_ms.
  Clock clock;
};

// Concurrent in-memory semantic tuple space. Every public operation is
// atomic; reads share a lock, writes, takes and reaping are exclusive.
// No operation blocks waiting for data.
class Space {
 public:
  explicit Space(SpaceOptions options = {});
  ~Space();

  Space(const Space&) = delete;
  Space& operator=(const Space&) = delete;

  // Installs or replaces the index of `model`. Stored entries stay; later
  // matching uses the new index.
  void load_model(MetaModel model, std::shared_ptr<const ConceptIndex> index);
  void load_model(MetaModel model, ConceptIndex index);
  // nullptr when nothing is loaded for `model`.
  std::shared_ptr<const ConceptIndex> index(MetaModel model) const;

  // Throws InvalidLease, ModelNotLoaded, UnknownConcept.
  WriteReceipt write(Payload payload, MetaModel model,
                     const ConceptId& concept_id, Millis requested_lease_ms);
  WriteReceipt write(std::string payload, MetaModel model,
                     const ConceptId& concept_id, Millis requested_lease_ms);

  // All live entries of q.model whose concept passes the floor against
  // q.concept_id. Throws ModelNotLoaded, UnknownConcept, FloorOutOfRange.
  ResultsList read(const SemanticQuery& q);
  ResultsList read_by_id(const SyntacticQuery& q);
  // Removes and returns every live entry annotated with exactly
  // `concept_id`. Throws ModelNotLoaded, UnknownConcept.
  ResultsList take(MetaModel model, const ConceptId& concept_id);

  // Reaps entries with expires_at <= now; returns how many.
  std::size_t expire(Millis now);
  std::size_t expire() { return expire(now()); }

  SpaceStats stats() const;
  Millis now() const { return clock_(); }
  const SpaceOptions& options() const noexcept { return options_; }

 private:
  struct Stored {
    InformationEntity entity;
    std::multimap<Millis, EntryId>::iterator expiry;
  };
  using ConceptLinks = std::unordered_map<ConceptId, std::set<EntryId>>;

  const ConceptIndex& loaded_locked(MetaModel model) const;
  void remove_locked(std::unordered_map<EntryId, Stored>::iterator it);
  void reaper_loop(std::stop_token stop);

  SpaceOptions options_;
  Clock clock_;

  mutable std::shared_mutex mu_;
  std::array<std::shared_ptr<const ConceptIndex>, kMetaModels.size()> models_;
  // Meta-information index: per model, concept -> entry ids.
  std::array<ConceptLinks, kMetaModels.size()> links_;
  std::array<std::uint64_t, kMetaModels.size()> per_model_{};
  std::unordered_map<EntryId, Stored> entries_;
  std::unordered_map<std::string, EntryId> by_identifier_;
  std::multimap<Millis, EntryId> by_expiry_;
  EntryId next_id_ = 1;

  std::atomic<std::uint64_t> total_writes_{0};
  std::atomic<std::uint64_t> total_reads_{0};
  std::atomic<std::uint64_t> total_takes_{0};
  std::atomic<std::uint64_t> expired_total_{0};

  std::mutex reaper_mu_;
  std::condition_variable_any reaper_cv_;
  std::jthread reaper_;
};

}  // namespace semspace
