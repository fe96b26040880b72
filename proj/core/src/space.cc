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

#include "semspace/space.h"

#include <algorithm>
#include <chrono>
#include <optional>

#include "semspace/error.h"
#include "semspace/similarity.h"

namespace semspace {

Millis system_clock_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch())
      .count();
}

Space::Space(SpaceOptions options)
    : options_(std::move(options)),
      clock_(options_.clock ? options_.clock : Clock(system_clock_ms)) {
  if (options_.max_lease_ms < 1) {
    throw Error(ErrorCode::kInvalidLease, "max lease must be at least 1 ms");
  }
  if (options_.reaper_interval_ms > 0) {
    reaper_ = std::jthread([this](std::stop_token stop) { reaper_loop(stop); });
  }
}

Space::~Space() {
  if (reaper_.joinable()) {
    reaper_.request_stop();
    reaper_cv_.notify_all();
    reaper_.join();
  }
}

void Space::reaper_loop(std::stop_token stop) {
  const auto interval = std::chrono::milliseconds(options_.reaper_interval_ms);
  std::unique_lock lock(reaper_mu_);
  while (!stop.stop_requested()) {
    reaper_cv_.wait_for(lock, stop, interval, [] { return false; });
    if (stop.stop_requested()) break;
    lock.unlock();
    expire();
    lock.lock();
  }
}

void Space::load_model(MetaModel model,
                       std::shared_ptr<const ConceptIndex> index) {
  std::unique_lock lock(mu_);
  models_[slot(model)] = std::move(index);
}

void Space::load_model(MetaModel model, ConceptIndex index) {
  load_model(model, std::make_shared<const ConceptIndex>(std::move(index)));
}

std::shared_ptr<const ConceptIndex> Space::index(MetaModel model) const {
  std::shared_lock lock(mu_);
  return models_[slot(model)];
}

const ConceptIndex& Space::loaded_locked(MetaModel model) const {
  const auto& index = models_[slot(model)];
  if (!index) {
    throw Error(ErrorCode::kModelNotLoaded,
                "no ontology loaded for model " + std::string(to_string(model)),
                std::string(to_string(model)));
  }
  return *index;
}

WriteReceipt Space::write(std::string payload, MetaModel model,
                          const ConceptId& concept_id,
                          Millis requested_lease_ms) {
  return write(make_payload(std::move(payload)), model, concept_id,
               requested_lease_ms);
}

WriteReceipt Space::write(Payload payload, MetaModel model,
                          const ConceptId& concept_id,
                          Millis requested_lease_ms) {
  if (requested_lease_ms < 1) {
    throw Error(ErrorCode::kInvalidLease,
                "lease must be a positive number of milliseconds, got " +
                    std::to_string(requested_lease_ms));
  }
  if (!payload) payload = make_payload({});

  std::unique_lock lock(mu_);
  const auto& index = loaded_locked(model);
  const auto& indexed = index.at(concept_id);

  const EntryId id = next_id_++;
  Lease lease;
  lease.requested_ms = requested_lease_ms;
  lease.granted_ms = std::min(requested_lease_ms, options_.max_lease_ms);
  lease.expires_at_ms = clock_() + lease.granted_ms;

  // Meta-information first, then the entry itself.
  links_[slot(model)][concept_id].insert(id);
  std::string identifier = "entry-" + std::to_string(id);
  by_identifier_.emplace(identifier, id);
  auto expiry = by_expiry_.emplace(lease.expires_at_ms, id);
  InformationEntity entity{
      id, std::move(payload),
      MetaInformation{model, concept_id, indexed.path_keys, identifier}, lease};
  entries_.emplace(id, Stored{std::move(entity), expiry});
  ++per_model_[slot(model)];
  total_writes_.fetch_add(1, std::memory_order_relaxed);

  return WriteReceipt{id, lease, std::move(identifier)};
}

ResultsList Space::read(const SemanticQuery& q) {
  check_floor(q.floor);
  total_reads_.fetch_add(1, std::memory_order_relaxed);

  std::shared_lock lock(mu_);
  const auto& index = loaded_locked(q.model);
  const auto& query = index.at(q.concept_id);
  const Millis now = clock_();

  struct Hit {
    DiceRatio ratio;
    const InformationEntity* entity;
  };
  std::vector<Hit> hits;
  for (const auto& [concept_id, ids] : links_[slot(q.model)]) {
    if (ids.empty()) continue;
    // Entries whose concept vanished in a reloaded ontology cannot match.
    const auto* candidate = index.find(concept_id);
    if (candidate == nullptr) continue;
    DiceRatio ratio = s_dice_exact(query, *candidate);
    if (!passes_floor(ratio, q.floor)) continue;
    for (EntryId id : ids) {
      const auto& stored = entries_.at(id);
      if (stored.entity.lease.expires_at_ms <= now) continue;
      hits.push_back({ratio, &stored.entity});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.ratio != b.ratio) return a.ratio > b.ratio;
    return a.entity->id < b.entity->id;
  });

  ResultsList out;
  out.reserve(hits.size());
  for (const auto& hit : hits) {
    const auto& e = *hit.entity;
    out.push_back({e.id, e.meta.concept_id, hit.ratio.value(), e.payload,
                   e.meta.identifier});
  }
  return out;
}

ResultsList Space::read_by_id(const SyntacticQuery& q) {
  total_reads_.fetch_add(1, std::memory_order_relaxed);
  std::shared_lock lock(mu_);
  auto it = by_identifier_.find(q.identifier);
  if (it == by_identifier_.end()) return {};
  const auto& e = entries_.at(it->second).entity;
  if (e.lease.expires_at_ms <= clock_()) return {};
  return {{e.id, e.meta.concept_id, 1.0, e.payload, e.meta.identifier}};
}

ResultsList Space::take(MetaModel model, const ConceptId& concept_id) {
  std::unique_lock lock(mu_);
  loaded_locked(model).at(concept_id);
  auto& links = links_[slot(model)];
  auto found = links.find(concept_id);
  if (found == links.end()) return {};

  const Millis now = clock_();
  std::vector<EntryId> ids(found->second.begin(), found->second.end());
  ResultsList out;
  for (EntryId id : ids) {
    auto it = entries_.find(id);
    const auto& e = it->second.entity;
    if (e.lease.expires_at_ms <= now) continue;
    out.push_back({e.id, e.meta.concept_id, 1.0, e.payload, e.meta.identifier});
    remove_locked(it);
  }
  total_takes_.fetch_add(out.size(), std::memory_order_relaxed);
  return out;
}

void Space::remove_locked(std::unordered_map<EntryId, Stored>::iterator it) {
  const auto& e = it->second.entity;
  auto& links = links_[slot(e.meta.model)];
  auto link = links.find(e.meta.concept_id);
  if (link != links.end()) {
    link->second.erase(e.id);
    if (link->second.empty()) links.erase(link);
  }
  by_identifier_.erase(e.meta.identifier);
  by_expiry_.erase(it->second.expiry);
  --per_model_[slot(e.meta.model)];
  entries_.erase(it);
}

std::size_t Space::expire(Millis now) {
  std::unique_lock lock(mu_);
  std::size_t removed = 0;
  while (!by_expiry_.empty() && by_expiry_.begin()->first <= now) {
    remove_locked(entries_.find(by_expiry_.begin()->second));
    ++removed;
  }
  expired_total_.fetch_add(removed, std::memory_order_relaxed);
  return removed;
}

SpaceStats Space::stats() const {
  std::shared_lock lock(mu_);
  SpaceStats s;
  s.live_entries = entries_.size();
  for (MetaModel m : kMetaModels) s.entries_per_model[m] = per_model_[slot(m)];
  s.total_writes = total_writes_.load();
  s.total_reads = total_reads_.load();
  s.total_takes = total_takes_.load();
  s.expired_total = expired_total_.load();
  return s;
}

}  // namespace semspace
