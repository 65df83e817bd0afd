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

// In-memory animation sessions backing the HTTP service.
//
// Requests on different sessions run concurrently. Requests on one session
// are serialized by a per-session mutex; the store-wide mutex is held only
// for map and LRU bookkeeping, never across a semantic computation.

#ifndef NILCSP_SESSION_HPP_
#define NILCSP_SESSION_HPP_

#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nilcsp/animation.hpp"
#include "nilcsp/error.hpp"

namespace nilcsp {

struct SessionView {
  std::string id;
  Status status;
  Trace trace;
  std::vector<Event> events;
};

class SessionNotFound : public Error {
 public:
  explicit SessionNotFound(const std::string& id)
      : Error("no session '" + id + "'") {}
};

class UnknownProcess : public Error {
 public:
  explicit UnknownProcess(const std::string& name)
      : Error("no process named '" + name + "'") {}
};

class EventNotOffered : public Error {
 public:
  EventNotOffered(const std::string& label, std::vector<Event> offered)
      : Error("event '" + label + "' is not offered"),
        offered_(std::move(offered)) {}

  const std::vector<Event>& offered() const { return offered_; }

 private:
  std::vector<Event> offered_;
};

class SessionStore {
 public:
  static constexpr std::size_t kDefaultCapacity = 256;

  explicit SessionStore(std::size_t capacity = kDefaultCapacity);

  /// Parses `source` and starts `process`. An empty process name selects the
  /// file's main expression. Throws ParseError / ResolveError on bad source,
  /// UnknownProcess, or SemanticError if the process cannot run. Evicts the
  /// least recently used session when full.
  SessionView create(std::string_view source, const std::string& process);

  /// All of these throw SessionNotFound for unknown ids.
  SessionView get(const std::string& id);
  /// Throws EventNotOffered when `label` is not in the current menu.
  SessionView step(const std::string& id, const std::string& label);
  SessionView reset(const std::string& id);
  void remove(const std::string& id);

  std::size_t size() const;
  std::size_t capacity() const { return capacity_; }

 private:
  struct Entry {
    std::mutex mutex;
    std::string id;
    std::uint64_t created_at;
    Animation animation;

    Entry(std::string id, std::uint64_t created_at, Animation animation)
        : id(std::move(id)),
          created_at(created_at),
          animation(std::move(animation)) {}
  };

  std::shared_ptr<Entry> lookup(const std::string& id);
  static SessionView view_of(const Entry& entry);
  static std::string new_id();

  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::uint64_t sequence_ = 0;
  std::list<std::string> lru_;  // most recent first
  struct Slot {
    std::shared_ptr<Entry> entry;
    std::list<std::string>::iterator position;
  };
  std::unordered_map<std::string, Slot> sessions_;
};

}  // namespace nilcsp

#endif  // NILCSP_SESSION_HPP_
