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

#include "cli.h"

#include <signal.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <httplib.h>
#include <json.hpp>

#include "semspace/base64.h"
#include "semspace/bench.h"
#include "semspace/concept_index.h"
#include "semspace/error.h"
#include "semspace/ontology_parser.h"
#include "semspace/similarity.h"
#include "semspace/space.h"
#include "semspace/wire_service.h"

namespace semspace::cli {
namespace {

using nlohmann::json;

// A failure the user can fix: bad flag values, unreachable server, or a
// 4xx reply. Exit code 1.
struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The server reported an internal fault. Exit code 2.
struct RemoteFault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string six_decimals(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot read file: " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

MetaModel model_flag(const std::string& tag) {
  auto m = parse_meta_model(tag);
  if (!m) throw UserError("--model must be RDFS or WSML, got " + tag);
  return *m;
}

OntologyFormat format_flag(const std::string& name) {
  if (name == "pairs") return OntologyFormat::kPairs;
  if (name == "ntriples") return OntologyFormat::kNTriples;
  throw UserError("--format must be pairs or ntriples, got " + name);
}

ConceptIndex load_index(const std::string& path, const std::string& format) {
  return build_concept_index(load_ontology_file(path, format_flag(format)));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "1024", "1K", "8M", "1KB", "8MB" (binary multiples).
std::size_t parse_size(std::string text) {
  std::size_t mult = 1;
  std::string upper = text;
  std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
  if (upper.ends_with("B") && upper.size() > 1 && !std::isdigit(upper[upper.size() - 2])) {
    upper.pop_back();
  }
  if (upper.ends_with("K")) {
    mult = 1u << 10, upper.pop_back();
  } else if (upper.ends_with("M")) {
    mult = 1u << 20, upper.pop_back();
  } else if (upper.ends_with("G")) {
    mult = 1u << 30, upper.pop_back();
  }
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(upper.data(), upper.data() + upper.size(), v);
  if (ec != std::errc() || end != upper.data() + upper.size() || v == 0) {
    throw UserError("bad size: " + text);
  }
  return v * mult;
}

template <typename T>
T parse_num(const std::string& text, const char* what) {
  T v{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UserError(std::string("bad ") + what + ": " + text);
  }
  return v;
}

class Remote {
 public:
  explicit Remote(const std::string& url) : url_(url), client_(url) {
    if (!client_.is_valid()) throw UserError("bad --server URL: " + url);
    client_.set_connection_timeout(5);
    client_.set_read_timeout(60);
  }

  json post(const std::string& path, const json& body) {
    return check(client_.Post(path, body.dump(), "application/json"));
  }

  json get(const std::string& path) { return check(client_.Get(path)); }

 private:
  json check(const httplib::Result& res) {
    if (!res) {
      throw UserError("cannot reach server " + url_ + ": " + httplib::to_string(res.error()));
    }
    json body = json::parse(res->body, nullptr, false);
    if (res->status >= 400) {
      std::string msg = "server error " + std::to_string(res->status);
      if (body.is_object() && body.contains("code")) {
        msg += " " + body.value("code", "") + ": " + body.value("message", "");
      }
      if (res->status >= 500) throw RemoteFault(msg);
      throw UserError(msg);
    }
    if (body.is_discarded()) throw RemoteFault("server sent invalid JSON");
    return body;
  }

  std::string url_;
  httplib::Client client_;
};

void print_results(const json& reply, bool as_json, std::ostream& out) {
  if (as_json) {
    out << reply.dump() << '\n';
    return;
  }
  for (const auto& r : reply.at("results")) {
    std::string payload = r.at("payload_b64").get<std::string>();
    std::size_t bytes = payload.size() / 4 * 3;
    if (payload.ends_with("==")) {
      bytes -= 2;
    } else if (payload.ends_with("=")) {
      bytes -= 1;
    }
    out << r.at("id").get<std::uint64_t>() << '\t' << six_decimals(r.at("degree").get<double>())
        << '\t' << r.at("concept").get<std::string>() << '\t'
        << r.at("identifier").get<std::string>() << '\t' << bytes << '\n';
  }
}

int serve(const wire::ServiceConfig& config, bool as_json, std::ostream& out) {
  // Block the stop signals before any server thread exists so only sigwait
  // below sees them.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

  wire::Service service(config);
  try {
    service.bind();
  } catch (const std::runtime_error& e) {
    throw UserError(e.what());
  }
  std::thread server([&] { service.run(); });
  service.wait_until_ready();
  std::string where = config.host + ":" + std::to_string(service.port());
  if (as_json) {
    out << json{{"listening", where}}.dump() << std::endl;
  } else {
    out << "semspace listening on " << where << std::endl;
  }
  int sig = 0;
  sigwait(&stop_signals, &sig);
  service.stop();
  server.join();
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"semspace: semantic tuple space engine"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  bool as_json = false;
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Emit one JSON document"); };

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  std::string listen = "127.0.0.1:8080";
  Millis max_lease_ms = 3'600'000;
  std::size_t max_payload_bytes = 64u << 20;
  Millis reaper_interval_ms = 1'000;
  std::vector<std::string> serve_ontologies, serve_formats, serve_models;
  serve_cmd->add_option("--listen", listen, "host:port (port 0 picks one)");
  serve_cmd->add_option("--max-lease-ms", max_lease_ms)->check(CLI::PositiveNumber);
  serve_cmd->add_option("--max-payload-bytes", max_payload_bytes)->check(CLI::PositiveNumber);
  serve_cmd->add_option("--reaper-interval-ms", reaper_interval_ms)->check(CLI::NonNegativeNumber);
  serve_cmd->add_option("--ontology", serve_ontologies, "Ontology file to preload (repeatable)");
  serve_cmd->add_option("--format", serve_formats, "pairs|ntriples, one per --ontology or one for all");
  serve_cmd->add_option("--model", serve_models, "RDFS|WSML, one per --ontology or one for all");
  json_flag(serve_cmd);

  // sdice / paths
  std::string ontology, format = "pairs", c1, c2, concept_uri;
  auto* sdice_cmd = app.add_subcommand("sdice", "Similarity of two concepts");
  sdice_cmd->add_option("--ontology", ontology)->required();
  sdice_cmd->add_option("--format", format);
  sdice_cmd->add_option("--c1", c1)->required();
  sdice_cmd->add_option("--c2", c2)->required();
  json_flag(sdice_cmd);

  auto* paths_cmd = app.add_subcommand("paths", "Root-to-concept paths of a concept");
  paths_cmd->add_option("--ontology", ontology)->required();
  paths_cmd->add_option("--format", format);
  paths_cmd->add_option("--concept", concept_uri)->required();
  json_flag(paths_cmd);

  // client commands
  std::string server_url = "http://127.0.0.1:8080";
  std::string model = "RDFS";
  std::string payload_file, identifier;
  Millis lease_ms = 60'000;
  double floor = 0.0;
  auto client = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--server", server_url, "Service base URL");
    json_flag(sub);
    return sub;
  };
  auto* write_cmd = client("write", "Write one entry");
  write_cmd->add_option("--model", model);
  write_cmd->add_option("--concept", concept_uri)->required();
  write_cmd->add_option("--lease-ms", lease_ms);
  write_cmd->add_option("--payload-file", payload_file, "Defaults to stdin");
  auto* read_cmd = client("read", "Semantic read");
  read_cmd->add_option("--model", model);
  read_cmd->add_option("--concept", concept_uri)->required();
  read_cmd->add_option("--floor", floor)->required();
  auto* take_cmd = client("take", "Take every entry of one concept");
  take_cmd->add_option("--model", model);
  take_cmd->add_option("--concept", concept_uri)->required();
  auto* read_id_cmd = client("read-by-id", "Read one entry by identifier");
  read_id_cmd->add_option("--identifier", identifier)->required();
  auto* load_cmd = client("load", "Load an ontology into a running service");
  load_cmd->add_option("--model", model);
  load_cmd->add_option("--ontology", ontology)->required();
  load_cmd->add_option("--format", format);
  auto* stats_cmd = client("stats", "Service counters");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Latency benchmark against an in-process space");
  std::string bench_op = "write", bench_sizes = "1K,8M", bench_threads = "1",
              bench_floors = "0.5", bench_out, bench_query;
  int bench_reps = 100, bench_warmup = 10;
  std::uint64_t bench_seed = 42;
  std::size_t bench_entries = 3430, bench_concepts = 343;
  bool strict = false;
  bench_cmd->add_option("--op", bench_op, "write|read|take");
  bench_cmd->add_option("--sizes", bench_sizes, "Comma list, K/M suffixes allowed");
  bench_cmd->add_option("--threads", bench_threads, "Comma list");
  bench_cmd->add_option("--floors", bench_floors, "Comma list in [0,1]");
  bench_cmd->add_option("--reps", bench_reps);
  bench_cmd->add_option("--warmup", bench_warmup);
  bench_cmd->add_option("--seed", bench_seed);
  bench_cmd->add_option("--entries", bench_entries);
  bench_cmd->add_option("--out", bench_out, "CSV path; stdout when omitted");
  bench_cmd->add_option("--ontology", ontology, "Defaults to a synthetic taxonomy");
  bench_cmd->add_option("--format", format);
  bench_cmd->add_option("--concepts", bench_concepts, "Synthetic taxonomy size");
  bench_cmd->add_option("--query-concept", bench_query);
  bench_cmd->add_flag("--strict", strict, "Exit 1 when a property fails");
  json_flag(bench_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  }

  try {
    if (serve_cmd->parsed()) {
      wire::ServiceConfig config;
      wire::parse_listen_address(listen, config);
      config.max_lease_ms = max_lease_ms;
      config.max_payload_bytes = max_payload_bytes;
      config.reaper_interval_ms = reaper_interval_ms;
      auto pick = [](const std::vector<std::string>& v, std::size_t i, std::size_t n,
                     const std::string& dflt, const char* flag) {
        if (v.empty()) return dflt;
        if (v.size() == 1) return v[0];
        if (v.size() != n) {
          throw UserError(std::string(flag) + " must be given once or once per --ontology");
        }
        return v[i];
      };
      for (std::size_t i = 0; i < serve_ontologies.size(); ++i) {
        std::size_t n = serve_ontologies.size();
        config.preload.push_back(
            {serve_ontologies[i], format_flag(pick(serve_formats, i, n, "pairs", "--format")),
             model_flag(pick(serve_models, i, n, "RDFS", "--model"))});
      }
      return serve(config, as_json, out);
    }

    if (sdice_cmd->parsed()) {
      ConceptIndex index = load_index(ontology, format);
      double degree = s_dice(index, ConceptId(c1), ConceptId(c2));
      if (as_json) {
        out << json{{"c1", c1}, {"c2", c2}, {"degree", degree}}.dump() << '\n';
      } else {
        out << six_decimals(degree) << '\n';
      }
      return kExitOk;
    }

    if (paths_cmd->parsed()) {
      ConceptIndex index = load_index(ontology, format);
      const auto& paths = paths_of(index, ConceptId(concept_uri));
      if (as_json) {
        json list = json::array();
        for (const auto& p : paths) {
          json nodes = json::array();
          for (const auto& n : p) nodes.push_back(n.uri());
          list.push_back(std::move(nodes));
        }
        out << json{{"concept", concept_uri}, {"paths", list}}.dump() << '\n';
      } else {
        for (const auto& p : paths) {
          for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " -> " : "") << p[i].uri();
          out << '\n';
        }
      }
      return kExitOk;
    }

    if (write_cmd->parsed()) {
      std::string payload = payload_file.empty()
                                ? std::string(std::istreambuf_iterator<char>(in), {})
                                : read_file(payload_file);
      json reply = Remote(server_url).post(
          "/v1/write", {{"model", model},
                        {"concept", concept_uri},
                        {"payload_b64", base64::encode(payload)},
                        {"lease_ms", lease_ms}});
      if (as_json) {
        out << reply.dump() << '\n';
      } else {
        out << "id=" << reply.at("id").get<std::uint64_t>()
            << " granted_lease_ms=" << reply.at("granted_lease_ms").get<std::int64_t>()
            << " expires_at_ms=" << reply.at("expires_at_ms").get<std::int64_t>() << '\n';
      }
      return kExitOk;
    }

    if (read_cmd->parsed()) {
      print_results(Remote(server_url).post(
                        "/v1/read", {{"model", model}, {"concept", concept_uri}, {"floor", floor}}),
                    as_json, out);
      return kExitOk;
    }
    if (take_cmd->parsed()) {
      print_results(
          Remote(server_url).post("/v1/take", {{"model", model}, {"concept", concept_uri}}),
          as_json, out);
      return kExitOk;
    }
    if (read_id_cmd->parsed()) {
      print_results(Remote(server_url).post("/v1/read_by_id", {{"identifier", identifier}}),
                    as_json, out);
      return kExitOk;
    }
    if (load_cmd->parsed()) {
      format_flag(format);
      json reply = Remote(server_url).post(
          "/v1/ontology", {{"model", model}, {"format", format}, {"data", read_file(ontology)}});
      if (as_json) {
        out << reply.dump() << '\n';
      } else {
        out << "concepts=" << reply.at("concepts").get<std::uint64_t>() << '\n';
      }
      return kExitOk;
    }
    if (stats_cmd->parsed()) {
      json reply = Remote(server_url).get("/v1/stats");
      if (as_json) {
        out << reply.dump() << '\n';
      } else {
        for (const auto& [key, value] : reply.items()) {
          if (value.is_object()) {
            for (const auto& [m, n] : value.items()) out << key << '.' << m << '=' << n << '\n';
          } else {
            out << key << '=' << value << '\n';
          }
        }
      }
      return kExitOk;
    }

    // bench
    bench::BenchConfig cfg;
    auto op = bench::parse_bench_op(bench_op);
    if (!op) throw UserError("--op must be write, read or take");
    cfg.op = *op;
    cfg.sizes.clear();
    for (const auto& s : split_list(bench_sizes)) cfg.sizes.push_back(parse_size(s));
    cfg.threads.clear();
    for (const auto& t : split_list(bench_threads)) cfg.threads.push_back(parse_num<int>(t, "thread count"));
    cfg.floors.clear();
    for (const auto& f : split_list(bench_floors)) cfg.floors.push_back(parse_num<double>(f, "floor"));
    cfg.reps = bench_reps;
    cfg.warmup = bench_warmup;
    cfg.seed = bench_seed;
    cfg.entries = bench_entries;
    cfg.out = bench_out;
    if (!bench_query.empty()) cfg.query_concept = bench_query;
    try {
      bench::validate(cfg);
    } catch (const std::invalid_argument& e) {
      throw UserError(e.what());
    }

    SpaceOptions options;
    options.reaper_interval_ms = 0;
    Space space(options);
    if (ontology.empty()) {
      space.load_model(cfg.model, build_concept_index(bench::synthetic_taxonomy(bench_concepts, cfg.seed)));
    } else {
      space.load_model(cfg.model, load_index(ontology, format));
    }
    auto report = bench::run_bench(cfg, space);
    if (!cfg.out.empty()) bench::write_csv(report, cfg.out);
    auto verdicts = bench::check_properties(report, space.stats());
    bool failed = std::any_of(verdicts.begin(), verdicts.end(),
                              [](const bench::Verdict& v) { return !v.passed(); });
    auto status_name = [](bench::VerdictStatus s) {
      return s == bench::VerdictStatus::kPass ? "PASS" : s == bench::VerdictStatus::kFail ? "FAIL" : "SKIP";
    };
    if (as_json) {
      json rows = json::array();
      for (const auto& r : report.rows) {
        rows.push_back({{"op", bench::to_string(r.op)}, {"size_bytes", r.size_bytes},
                        {"threads", r.threads}, {"floor", r.floor}, {"count", r.count},
                        {"mean_ms", r.mean_ms}, {"p50_ms", r.p50_ms}, {"p95_ms", r.p95_ms}});
      }
      json vs = json::array();
      for (const auto& v : verdicts) {
        vs.push_back({{"property", v.property}, {"status", status_name(v.status)}, {"detail", v.detail}});
      }
      out << json{{"rows", rows}, {"verdicts", vs}, {"environment", report.environment}}.dump()
          << '\n';
    } else {
      if (cfg.out.empty()) bench::write_csv(report, out);
      err << "# " << report.environment << '\n';
      for (const auto& v : verdicts) {
        err << status_name(v.status) << ' ' << v.property << ": " << v.detail << '\n';
      }
    }
    return strict && failed ? kExitUserError : kExitOk;
  } catch (const UserError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  } catch (const RemoteFault& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace semspace::cli
