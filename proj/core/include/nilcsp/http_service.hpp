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

// HTTP+JSON facade over SessionStore.
//
//   POST   /sessions            {source, process} -> 201 view
//   GET    /sessions/{id}       -> 200 view
//   POST   /sessions/{id}/step  {event} -> 200 view | 409 {error, offered}
//   POST   /sessions/{id}/reset -> 200 view
//   DELETE /sessions/{id}       -> 204
//   GET    /health              -> 200 "ok"
//
// A view is {id, status, trace, events}; trace and events are arrays of
// labels with tick spelled "tick".

#ifndef NILCSP_HTTP_SERVICE_HPP_
#define NILCSP_HTTP_SERVICE_HPP_

#include <memory>
#include <string>

#include "nilcsp/session.hpp"

namespace nilcsp {

struct ServiceOptions {
  std::string bind_address = "127.0.0.1";
  int port = 7420;
  std::size_t session_capacity = SessionStore::kDefaultCapacity;
  /// Value of Access-Control-Allow-Origin.
  std::string cors_origin = "*";
};

/// Renders a view as the JSON object the service returns.
std::string session_view_json(const SessionView& view);

class HttpService {
 public:
  explicit HttpService(ServiceOptions options);
  ~HttpService();

  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds the listening socket. Port 0 picks a free port. Returns false if
  /// the address is unavailable.
  bool bind();
  /// Port actually bound; valid after a successful bind().
  int port() const;
  /// Serves until stop(). Requires a successful bind().
  void serve();
  /// Blocks until serve() is accepting connections.
  void wait_until_ready() const;
  /// Ends serve(). Has no effect before serve() is running.
  void stop();

  SessionStore& store();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace nilcsp

#endif  // NILCSP_HTTP_SERVICE_HPP_
