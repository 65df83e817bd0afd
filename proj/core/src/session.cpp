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

#include "nilcsp/session.hpp"

#include <array>
#include <cstdio>
#include <random>

#include "nilcsp/parser.hpp"

namespace nilcsp {

SessionStore::SessionStore(std::size_t capacity)
    : capacity_(capacity == 0 ? 1 : capacity) {}

std::string SessionStore::new_id() {
  // 128 bits straight from the OS entropy source.
  static thread_local std::random_device device;
  std::string id;
  for (int i = 0; i < 4; ++i) {
    std::array<char, 9> buf{};
    std::snprintf(buf.data(), buf.size(), "%08x",
                  static_cast<unsigned>(device()));
    id += buf.data();
  }
  return id;
}

SessionView SessionStore::view_of(const Entry& entry) {
  return {entry.id, entry.animation.status(), entry.animation.trace(),
          entry.animation.menu()};
}

SessionView SessionStore::create(std::string_view source,
                                 const std::string& process) {
  SourceFile file = parse(source);
  Definitions defs = file.definitions.desugared();
  Term initial = Term::stop();
  if (process.empty()) {
    if (!file.main) throw UnknownProcess("(main expression)");
    initial = desugar(*file.main);
  } else {
    if (!defs.contains(process)) throw UnknownProcess(process);
    initial = Term::ref(process);
  }
  Animation animation(std::move(defs), std::move(initial));

  std::lock_guard lock(mutex_);
  std::string id;
  do {
    id = new_id();
  } while (sessions_.contains(id));
  auto entry =
      std::make_shared<Entry>(id, ++sequence_, std::move(animation));
  while (sessions_.size() >= capacity_) {
    sessions_.erase(lru_.back());
    lru_.pop_back();
  }
  lru_.push_front(id);
  sessions_.emplace(id, Slot{entry, lru_.begin()});
  return view_of(*entry);
}

std::shared_ptr<SessionStore::Entry> SessionStore::lookup(
    const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw SessionNotFound(id);
  lru_.splice(lru_.begin(), lru_, it->second.position);
  return it->second.entry;
}

SessionView SessionStore::get(const std::string& id) {
  auto entry = lookup(id);
  std::lock_guard lock(entry->mutex);
  return view_of(*entry);
}

SessionView SessionStore::step(const std::string& id,
                               const std::string& label) {
  auto entry = lookup(id);
  std::lock_guard lock(entry->mutex);
  auto& animation = entry->animation;
  for (const auto& e : animation.menu()) {
    if (e.label() == label) {
      animation.step(e);
      return view_of(*entry);
    }
  }
  throw EventNotOffered(label, animation.menu());
}

SessionView SessionStore::reset(const std::string& id) {
  auto entry = lookup(id);
  std::lock_guard lock(entry->mutex);
  entry->animation.reset();
  return view_of(*entry);
}

void SessionStore::remove(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw SessionNotFound(id);
  lru_.erase(it->second.position);
  sessions_.erase(it);
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

}  // namespace nilcsp
