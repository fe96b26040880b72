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

#include "semspace/wire_service.h"

#include <charconv>
#include <optional>
#include <stdexcept>

#include <httplib.h>
#include <json.hpp>

#include "semspace/base64.h"
#include "semspace/concept_index.h"
#include "semspace/error.h"
#include "semspace/similarity.h"

namespace semspace::wire {
namespace {

using nlohmann::json;

// Thrown while decoding a request; turned into an error response by route().
struct RequestError {
  WireCode code;
  std::string message;
};

[[noreturn]] void malformed(std::string message) {
  throw RequestError{WireCode::kMalformedRequest, std::move(message)};
}

WireCode wire_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownConcept: return WireCode::kUnknownConcept;
    case ErrorCode::kModelNotLoaded: return WireCode::kModelNotLoaded;
    case ErrorCode::kInvalidLease: return WireCode::kInvalidLease;
    case ErrorCode::kFloorOutOfRange: return WireCode::kFloorOutOfRange;
    case ErrorCode::kMalformedLine:
    case ErrorCode::kCycleDetected:
    case ErrorCode::kHashCollision:
    case ErrorCode::kInvalidConcept:
      return WireCode::kMalformedRequest;
    case ErrorCode::kIo: return WireCode::kInternal;
  }
  return WireCode::kInternal;
}

WireResponse ok(const json& body) { return {200, body.dump()}; }

json parse_object(const std::string& body) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) malformed("request body is not valid JSON");
  if (!doc.is_object()) malformed("request body must be a JSON object");
  return doc;
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) malformed(std::string("missing field '") + name + "'");
  return *it;
}

std::string string_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_string()) malformed(std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

MetaModel model_from(const std::string& tag) {
  auto model = parse_meta_model(tag);
  if (!model) malformed("model must be \"RDFS\" or \"WSML\", got \"" + tag + "\"");
  return *model;
}

ConceptId concept_from(const std::string& uri) {
  if (!ConceptId::is_valid(uri)) {
    malformed("concept must be non-empty and contain no whitespace");
  }
  return ConceptId(uri);
}

Millis lease_from(const json& v) {
  if (!v.is_number_integer()) malformed("field 'lease_ms' must be an integer");
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    return u > static_cast<std::uint64_t>(INT64_MAX) ? INT64_MAX
                                                     : static_cast<Millis>(u);
  }
  return v.get<Millis>();
}

const std::string* query_param(const WireRequest& req, const std::string& key) {
  auto it = req.query.find(key);
  return it == req.query.end() ? nullptr : &it->second;
}

json result_json(const Result& r) {
  return json{{"id", r.id},
              {"concept", r.concept_id.uri()},
              {"degree", r.degree},
              {"payload_b64", base64::encode(r.payload ? *r.payload : std::string())},
              {"identifier", r.identifier}};
}

}  // namespace

std::string_view to_string(WireCode code) {
  switch (code) {
    case WireCode::kMalformedRequest: return "MALFORMED_REQUEST";
    case WireCode::kModelNotLoaded: return "MODEL_NOT_LOADED";
    case WireCode::kUnknownConcept: return "UNKNOWN_CONCEPT";
    case WireCode::kFloorOutOfRange: return "FLOOR_OUT_OF_RANGE";
    case WireCode::kInvalidLease: return "INVALID_LEASE";
    case WireCode::kPayloadTooLarge: return "PAYLOAD_TOO_LARGE";
    case WireCode::kInternal: return "INTERNAL";
  }
  return "INTERNAL";
}

int http_status(WireCode code) {
  switch (code) {
    case WireCode::kMalformedRequest: return 400;
    case WireCode::kModelNotLoaded: return 409;
    case WireCode::kUnknownConcept: return 404;
    case WireCode::kFloorOutOfRange: return 400;
    case WireCode::kInvalidLease: return 400;
    case WireCode::kPayloadTooLarge: return 413;
    case WireCode::kInternal: return 500;
  }
  return 500;
}

WireResponse error_response(WireCode code, std::string_view message,
                            int status) {
  json body{{"code", to_string(code)}, {"message", message}};
  return {status != 0 ? status : http_status(code),
          body.dump(-1, ' ', false, json::error_handler_t::replace)};
}

std::string results_to_json(const ResultsList& results) {
  json list = json::array();
  for (const auto& r : results) list.push_back(result_json(r));
  return json{{"results", std::move(list)}}.dump(-1, ' ', false,
                                                 json::error_handler_t::replace);
}

std::string stats_to_json(const SpaceStats& s) {
  json per_model = json::object();
  for (const auto& [model, n] : s.entries_per_model) {
    per_model[std::string(to_string(model))] = n;
  }
  return json{{"live_entries", s.live_entries},
              {"entries_per_model", per_model},
              {"total_writes", s.total_writes},
              {"total_reads", s.total_reads},
              {"total_takes", s.total_takes},
              {"expired_total", s.expired_total}}
      .dump();
}

Router::Router(Space& space, std::size_t max_payload_bytes)
    : space_(space), max_payload_bytes_(max_payload_bytes) {}

WireResponse Router::route(const WireRequest& req) const {
  try {
    if (req.body.size() > max_payload_bytes_) {
      return error_response(WireCode::kPayloadTooLarge,
                            "request body exceeds " +
                                std::to_string(max_payload_bytes_) + " bytes");
    }
    const bool get = req.method == "GET";
    const bool post = req.method == "POST";
    const std::string& path = req.path;

    static const char* const kGetRoutes[] = {"/v1/health", "/v1/sdice", "/v1/stats"};
    static const char* const kPostRoutes[] = {"/v1/ontology", "/v1/write", "/v1/read",
                                              "/v1/read_by_id", "/v1/take"};
    bool known_get = false;
    bool known_post = false;
    for (const char* r : kGetRoutes) known_get |= path == r;
    for (const char* r : kPostRoutes) known_post |= path == r;
    if (!known_get && !known_post) {
      return error_response(WireCode::kMalformedRequest, "no such endpoint: " + path, 404);
    }
    if ((known_get && !get) || (known_post && !post)) {
      return error_response(WireCode::kMalformedRequest,
                            "method " + req.method + " not allowed on " + path, 405);
    }

    if (path == "/v1/health") return ok(json{{"status", "ok"}});
    if (path == "/v1/stats") return {200, stats_to_json(space_.stats())};

    if (path == "/v1/sdice") {
      const auto* model = query_param(req, "model");
      const auto* c1 = query_param(req, "c1");
      const auto* c2 = query_param(req, "c2");
      if (!model || !c1 || !c2) malformed("sdice needs model, c1 and c2");
      auto index = space_.index(model_from(*model));
      if (!index) {
        throw RequestError{WireCode::kModelNotLoaded,
                           "no ontology loaded for model " + *model};
      }
      return ok(json{{"degree", s_dice(*index, concept_from(*c1), concept_from(*c2))}});
    }

    json doc = parse_object(req.body);

    if (path == "/v1/ontology") {
      MetaModel model = model_from(string_field(doc, "model"));
      OntologyFormat format;
      try {
        format = parse_ontology_format(string_field(doc, "format"));
      } catch (const Error& e) {
        malformed(e.what());
      }
      auto index = std::make_shared<const ConceptIndex>(
          build_concept_index(parse_ontology(string_field(doc, "data"), format)));
      std::size_t n = index->size();
      space_.load_model(model, std::move(index));
      return ok(json{{"concepts", n}});
    }

    if (path == "/v1/write") {
      MetaModel model = model_from(string_field(doc, "model"));
      ConceptId concept_id = concept_from(string_field(doc, "concept"));
      auto payload = base64::decode(string_field(doc, "payload_b64"));
      if (!payload) malformed("payload_b64 is not valid base64");
      Millis lease = lease_from(field(doc, "lease_ms"));
      auto receipt = space_.write(std::move(*payload), model, concept_id, lease);
      return ok(json{{"id", receipt.id},
                     {"granted_lease_ms", receipt.lease.granted_ms},
                     {"expires_at_ms", receipt.lease.expires_at_ms}});
    }

    if (path == "/v1/read") {
      MetaModel model = model_from(string_field(doc, "model"));
      ConceptId concept_id = concept_from(string_field(doc, "concept"));
      const json& floor = field(doc, "floor");
      if (!floor.is_number()) malformed("field 'floor' must be a number");
      return {200, results_to_json(space_.read({model, concept_id, floor.get<double>()}))};
    }

    if (path == "/v1/read_by_id") {
      std::string identifier = string_field(doc, "identifier");
      if (identifier.empty()) malformed("identifier must be non-empty");
      return {200, results_to_json(space_.read_by_id({std::move(identifier)}))};
    }

    // /v1/take
    MetaModel model = model_from(string_field(doc, "model"));
    ConceptId concept_id = concept_from(string_field(doc, "concept"));
    return {200, results_to_json(space_.take(model, concept_id))};
  } catch (const RequestError& e) {
    return error_response(e.code, e.message);
  } catch (const Error& e) {
    return error_response(wire_code(e.code()), e.what());
  } catch (const std::exception& e) {
    return error_response(WireCode::kInternal, e.what());
  } catch (...) {
    return error_response(WireCode::kInternal, "unknown failure");
  }
}

void parse_listen_address(std::string_view listen, ServiceConfig& config) {
  auto colon = listen.rfind(':');
  auto fail = [&] {
    throw Error(ErrorCode::kMalformedLine,
                "listen address must be host:port, got '" + std::string(listen) + "'");
  };
  if (colon == std::string_view::npos || colon == 0) fail();
  std::string_view port_text = listen.substr(colon + 1);
  int port = -1;
  auto [end, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
  if (ec != std::errc() || end != port_text.data() + port_text.size() || port < 0 ||
      port > 65535) {
    fail();
  }
  config.host = std::string(listen.substr(0, colon));
  config.port = port;
}

void preload_ontologies(Space& space, const ServiceConfig& config) {
  for (const auto& p : config.preload) {
    space.load_model(p.model, build_concept_index(load_ontology_file(p.path, p.format)));
  }
}

struct Service::Impl {
  httplib::Server server;
  std::unique_ptr<Router> router;
};

namespace {

std::shared_ptr<Space> make_space(const ServiceConfig& config) {
  SpaceOptions options;
  options.max_lease_ms = config.max_lease_ms;
  options.reaper_interval_ms = config.reaper_interval_ms;
  return std::make_shared<Space>(std::move(options));
}

}  // namespace

Service::Service(ServiceConfig config)
    : Service(config, make_space(config)) {
  preload_ontologies(*space_, config_);
}

Service::Service(ServiceConfig config, std::shared_ptr<Space> space)
    : config_(std::move(config)), space_(std::move(space)), impl_(std::make_unique<Impl>()) {
  if (config_.max_payload_bytes < 1) {
    throw std::invalid_argument("max_payload_bytes must be at least 1");
  }
  impl_->router = std::make_unique<Router>(*space_, config_.max_payload_bytes);
  auto& server = impl_->server;
  server.set_payload_max_length(config_.max_payload_bytes);

  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    WireRequest wire{req.method, req.path, {req.params.begin(), req.params.end()}, req.body};
    WireResponse out = impl_->router->route(wire);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  const std::string any = R"(/.*)";
  server.Get(any, handler);
  server.Post(any, handler);
  server.Put(any, handler);
  server.Delete(any, handler);
  server.Patch(any, handler);

  // Requests httplib rejects on its own (oversized body, bad framing) still
  // get a WireError body.
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
    WireResponse out = res.status == 413
                           ? error_response(WireCode::kPayloadTooLarge, "request body too large")
                           : error_response(WireCode::kMalformedRequest, "bad request",
                                            res.status);
    res.set_content(out.body, "application/json");
    return httplib::Server::HandlerResponse::Handled;
  });
  server.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
        WireResponse out = error_response(WireCode::kInternal, "unhandled exception");
        res.status = out.status;
        res.set_content(out.body, "application/json");
      });
}

Service::~Service() { stop(); }

void Service::bind() {
  if (port_ >= 0) return;
  auto& server = impl_->server;
  if (config_.port == 0) {
    port_ = server.bind_to_any_port(config_.host);
  } else {
    port_ = server.bind_to_port(config_.host, config_.port) ? config_.port : -1;
  }
  if (port_ < 0) {
    throw std::runtime_error("BindFailure: cannot listen on " + config_.host + ":" +
                             std::to_string(config_.port));
  }
}

void Service::run() {
  bind();
  impl_->server.listen_after_bind();
}

void Service::stop() {
  if (impl_) impl_->server.stop();
}

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace semspace::wire
