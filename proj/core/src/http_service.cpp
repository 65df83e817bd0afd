// Copyright 2026 The nilcsp Authors
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

#include "nilcsp/http_service.hpp"

#include <httplib.h>

#include <json.hpp>

namespace nilcsp {

using json = nlohmann::ordered_json;

namespace {

json labels(const std::vector<Event>& events) {
  json out = json::array();
  for (const auto& e : events) out.push_back(e.label());
  return out;
}

json view_to_json(const SessionView& view) {
  json j;
  j["id"] = view.id;
  j["status"] = std::string(to_string(view.status));
  j["trace"] = labels(view.trace.events());
  j["events"] = labels(view.events);
  return j;
}

void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void reply_error(httplib::Response& res, int status, const std::string& msg) {
  json j;
  j["error"] = msg;
  reply(res, status, j);
}

// Parses the request body as a JSON object; replies 400 and returns false
// otherwise.
bool body_object(const httplib::Request& req, httplib::Response& res,
                 json& out) {
  out = json::parse(req.body, nullptr, false);
  if (out.is_discarded() || !out.is_object()) {
    reply_error(res, 400, "request body must be a JSON object");
    return false;
  }
  return true;
}

bool string_field(const json& body, const char* key, std::string& out) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_string()) return false;
  out = it->get<std::string>();
  return true;
}

}  // namespace

std::string session_view_json(const SessionView& view) {
  return view_to_json(view).dump();
}

struct HttpService::Impl {
  ServiceOptions options;
  SessionStore store;
  httplib::Server server;
  int bound_port = -1;

  explicit Impl(ServiceOptions opts)
      : options(std::move(opts)), store(options.session_capacity) {
    server.set_default_headers(
        {{"Access-Control-Allow-Origin", options.cors_origin}});
    // No SO_REUSEPORT: a second server must fail to bind a taken port.
    server.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR,
                 reinterpret_cast<const void*>(&yes), sizeof(yes));
    });
    routes();
  }

  // Runs `action` and maps store errors to status codes.
  template <typename F>
  void guarded(httplib::Response& res, F&& action) {
    try {
      action();
    } catch (const SessionNotFound& e) {
      reply_error(res, 404, e.what());
    } catch (const UnknownProcess& e) {
      reply_error(res, 404, e.what());
    } catch (const EventNotOffered& e) {
      json j;
      j["error"] = e.what();
      j["offered"] = labels(e.offered());
      reply(res, 409, j);
    } catch (const ParseError& e) {
      json j;
      j["error"] = e.message();
      j["line"] = e.line();
      j["column"] = e.column();
      j["expected"] = e.expected();
      reply(res, 400, j);
    } catch (const ResolveError& e) {
      json j;
      j["error"] = e.message();
      j["line"] = e.line();
      j["column"] = e.column();
      j["expected"] = json::array();
      reply(res, 400, j);
    } catch (const SemanticError& e) {
      reply_error(res, 422, e.what());
    } catch (const std::exception& e) {
      reply_error(res, 500, e.what());
    }
  }

  void routes() {
    server.Options(R"(.*)", [](const httplib::Request&,
                               httplib::Response& res) {
      res.set_header("Access-Control-Allow-Methods",
                     "GET, POST, DELETE, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.status = 204;
    });

    server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("ok", "text/plain");
    });

    server.Post("/sessions", [this](const httplib::Request& req,
                                    httplib::Response& res) {
      json body;
      if (!body_object(req, res, body)) return;
      std::string source;
      std::string process;
      if (!string_field(body, "source", source)) {
        reply_error(res, 400, "missing string field 'source'");
        return;
      }
      string_field(body, "process", process);
      guarded(res, [&] { reply(res, 201, view_to_json(store.create(source, process))); });
    });

    server.Get(R"(/sessions/([0-9a-f]+))",
               [this](const httplib::Request& req, httplib::Response& res) {
                 guarded(res, [&] {
                   reply(res, 200, view_to_json(store.get(req.matches[1])));
                 });
               });

    server.Post(R"(/sessions/([0-9a-f]+)/step)",
                [this](const httplib::Request& req, httplib::Response& res) {
                  json body;
                  if (!body_object(req, res, body)) return;
                  std::string event;
                  if (!string_field(body, "event", event)) {
                    reply_error(res, 400, "missing string field 'event'");
                    return;
                  }
                  guarded(res, [&] {
                    reply(res, 200,
                          view_to_json(store.step(req.matches[1], event)));
                  });
                });

    server.Post(R"(/sessions/([0-9a-f]+)/reset)",
                [this](const httplib::Request& req, httplib::Response& res) {
                  guarded(res, [&] {
                    reply(res, 200, view_to_json(store.reset(req.matches[1])));
                  });
                });

    server.Delete(R"(/sessions/([0-9a-f]+))",
                  [this](const httplib::Request& req, httplib::Response& res) {
                    guarded(res, [&] {
                      store.remove(req.matches[1]);
                      res.status = 204;
                    });
                  });
  }
};

HttpService::HttpService(ServiceOptions options)
    : impl_(std::make_unique<Impl>(std::move(options))) {}

HttpService::~HttpService() { stop(); }

bool HttpService::bind() {
  if (impl_->options.port == 0) {
    impl_->bound_port =
        impl_->server.bind_to_any_port(impl_->options.bind_address);
    return impl_->bound_port > 0;
  }
  if (!impl_->server.bind_to_port(impl_->options.bind_address,
                                  impl_->options.port)) {
    return false;
  }
  impl_->bound_port = impl_->options.port;
  return true;
}

int HttpService::port() const { return impl_->bound_port; }

void HttpService::serve() { impl_->server.listen_after_bind(); }

void HttpService::wait_until_ready() const { impl_->server.wait_until_ready(); }

void HttpService::stop() { impl_->server.stop(); }

SessionStore& HttpService::store() { return impl_->store; }

}  // namespace nilcsp
