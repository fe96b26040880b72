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
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "semspace/meta_model.h"
#include "semspace/ontology_parser.h"
#include "semspace/space.h"

namespace semspace::wire {

// HTTP/1.1 + JSON front end for a Space.
//
//   GET  /v1/health                 -> {"status":"ok"}
//   POST /v1/ontology   {model, format, data}            -> {"concepts":N}
//   POST /v1/write      {model, concept, payload_b64, lease_ms}
//                                   -> {"id","granted_lease_ms","expires_at_ms"}
//   POST /v1/read       {model, concept, floor}          -> {"results":[...]}
//   POST /v1/read_by_id {identifier}                     -> {"results":[...]}
//   POST /v1/take       {model, concept}                 -> {"results":[...]}
//   GET  /v1/sdice?model=&c1=&c2=                        -> {"degree":x}
//   GET  /v1/stats                                       -> SpaceStats
//
// A result is {"id","concept","degree","payload_b64","identifier"}. Errors
// carry {"code","message"} with one of the WireCode names.

enum class WireCode {
  kMalformedRequest,
  kModelNotLoaded,
  kUnknownConcept,
  kFloorOutOfRange,
  kInvalidLease,
  kPayloadTooLarge,
  kInternal,
};

std::string_view to_string(WireCode code);
int http_status(WireCode code);

struct WireRequest {
  std::string method;
  std::string path;
  std::multimap<std::string, std::string> query;
  std::string body;
};

struct WireResponse {
  int status = 200;
  std::string body;
};

WireResponse error_response(WireCode code, std::string_view message,
                            int status = 0);

std::string results_to_json(const ResultsList& results);
std::string stats_to_json(const SpaceStats& stats);

// Stateless request dispatch onto a Space; never throws.
class Router {
 public:
  Router(Space& space, std::size_t max_payload_bytes);

  WireResponse route(const WireRequest& request) const;

 private:
  Space& space_;
  std::size_t max_payload_bytes_;
};

struct OntologyPreload {
  std::string path;
  OntologyFormat format;
  MetaModel model;
};

struct ServiceConfig {
  std::string host = "127.0.0.1";
  // 0 binds an ephemeral port; see Service::port().
  int port = 8080;
  Millis max_lease_ms = 3'600'000;
  // Upper bound on the request body, base64 expansion included.
  std::size_t max_payload_bytes = 64u << 20;
  Millis reaper_interval_ms = 1'000;
  std::vector<OntologyPreload> preload;
};

// Throws Error(kMalformedLine) for a bad "host:port".
void parse_listen_address(std::string_view listen, ServiceConfig& config);

// Owns the HTTP server. The Space may be supplied by the caller (tests
// share one with direct library calls); otherwise it is built from config.
class Service {
 public:
  explicit Service(ServiceConfig config);
  Service(ServiceConfig config, std::shared_ptr<Space> space);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds the listen socket. Throws std::runtime_error (BindFailure).
  void bind();
  // Serves until stop(); binds first if needed.
  void run();
  // Stops accepting and waits for in-flight requests. Thread-safe.
  void stop();
  // Blocks until the server accepts connections.
  void wait_until_ready() const;

  int port() const noexcept { return port_; }
  Space& space() noexcept { return *space_; }
  const ServiceConfig& config() const noexcept { return config_; }

 private:
  struct Impl;

  ServiceConfig config_;
  std::shared_ptr<Space> space_;
  std::unique_ptr<Impl> impl_;
  int port_ = -1;
};

// Loads every preload entry of `config` into `space`.
void preload_ontologies(Space& space, const ServiceConfig& config);

}  // namespace semspace::wire
