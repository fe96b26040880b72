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

#include <memory>
#include <string>
#include <thread>

#include <httplib.h>

#include "semspace/wire_service.h"

namespace semspace::testing {

// A Service on an ephemeral loopback port, served from a background thread.
class TestServer {
 public:
  explicit TestServer(std::shared_ptr<Space> space,
                      wire::ServiceConfig config = {}) {
    config.host = "127.0.0.1";
    config.port = 0;
    service_ = std::make_unique<wire::Service>(config, std::move(space));
    service_->bind();
    thread_ = std::jthread([this] { service_->run(); });
    service_->wait_until_ready();
  }

  ~TestServer() {
    service_->stop();
    thread_.join();
  }

  int port() const { return service_->port(); }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port()); }
  wire::Service& service() { return *service_; }

  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port());
    c.set_read_timeout(30, 0);
    return c;
  }

 private:
  std::unique_ptr<wire::Service> service_;
  std::jthread thread_;
};

}  // namespace semspace::testing
