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

#include "qgeom/service.hpp"

#include <json.hpp>

#include "qgeom/api.hpp"
#include "qgeom/error.hpp"

// After Eigen: <resolv.h> defines a `_res` macro that breaks Eigen's headers.
#include <httplib.h>

namespace qgeom::service {

HttpResult handle(std::string_view op, std::string_view body, const Tolerances& tol) {
    const auto& ops = api::operations();
    if (std::find(ops.begin(), ops.end(), op) == ops.end()) {
        const Error err(ErrorCode::ParseError, "unknown operation '" + std::string(op) + "'");
        return {404, api::dump(api::error_body(err))};
    }
    nlohmann::json request;
    try {
        request = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        return {400, api::dump(api::error_body(Error(ErrorCode::ParseError, e.what())))};
    }
    try {
        return {200, api::dump(api::call(op, request, tol))};
    } catch (const Error& e) {
        return {e.is_malformed_input() ? 400 : 422, api::dump(api::error_body(e))};
    } catch (const std::exception& e) {
        return {500, api::dump(api::error_body(e))};
    }
}

struct Server::Impl {
    Options options;
    httplib::Server http;
};

Server::Server(Options options) : impl_(std::make_unique<Impl>()) {
    impl_->options = std::move(options);
    httplib::Server& http = impl_->http;
    http.set_payload_max_length(impl_->options.max_body_bytes);
    http.set_default_headers({
        {"Access-Control-Allow-Origin", impl_->options.cors_origin},
        {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
        {"Access-Control-Allow-Headers", "Content-Type"},
    });
    http.Get("/v1/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(R"({"status":"ok"})", "application/json");
    });
    http.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    const Tolerances tol = impl_->options.tol;
    http.Post(R"(/v1/([a-z_]+))", [tol](const httplib::Request& req, httplib::Response& res) {
        const HttpResult r = handle(req.matches[1].str(), req.body, tol);
        res.status = r.status;
        res.set_content(r.body, "application/json");
    });
}

Server::~Server() { stop(); }

bool Server::listen(const std::string& host, int port) { return impl_->http.listen(host, port); }
int Server::bind_to_any_port(const std::string& host) { return impl_->http.bind_to_any_port(host); }
bool Server::listen_after_bind() { return impl_->http.listen_after_bind(); }
void Server::stop() { impl_->http.stop(); }
void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace qgeom::service
