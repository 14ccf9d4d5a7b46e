// Copyright 2026 The qgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "qgeom/config.hpp"

namespace qgeom::service {

struct Options {
    std::string cors_origin = "*";
    std::size_t max_body_bytes = 1 << 20;
    Tolerances tol;
};

struct HttpResult {
    int status = 200;
    std::string body;
};

/// Stateless handler behind POST /v1/{op}: 200 with the operation's JSON,
/// 400 for malformed input, 404 for an unknown operation, 422 for domain
/// errors, 500 otherwise. Error bodies are {"error": {code, message, residual}}.
HttpResult handle(std::string_view op, std::string_view body, const Tolerances& tol = {});

/// HTTP/1.1 front end over handle(). Also serves GET /v1/health and CORS
/// preflight requests.
class Server {
  public:
    explicit Server(Options options = {});
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    /// Blocks until stop(). Returns false if the address cannot be bound.
    bool listen(const std::string& host, int port);
    /// Binds an ephemeral port and returns it (or -1); serve with listen_after_bind().
    int bind_to_any_port(const std::string& host);
    bool listen_after_bind();
    void stop();
    void wait_until_ready() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace qgeom::service
