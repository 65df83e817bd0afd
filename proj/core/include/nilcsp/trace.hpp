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

#ifndef NILCSP_TRACE_HPP_
#define NILCSP_TRACE_HPP_

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "nilcsp/event.hpp"

namespace nilcsp {

/// A finite sequence of events. Raw traces may contain nil; the observable
/// form does not. Tick is an ordinary, recorded event.
class Trace {
 public:
  Trace() = default;
  Trace(std::initializer_list<Event> events) : events_(events) {}
  explicit Trace(std::vector<Event> events) : events_(std::move(events)) {}

  const std::vector<Event>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }
  const Event& operator[](std::size_t i) const { return events_[i]; }

  void push_back(Event e) { events_.push_back(std::move(e)); }
  Trace extended(Event e) const;
  /// The first `n` events.
  Trace prefix(std::size_t n) const;

  bool is_observable() const;

  friend bool operator==(const Trace&, const Trace&) = default;
  // Lexicographic by event spelling; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Trace& a, const Trace& b) {
    return a.events_ <=> b.events_;
  }

 private:
  std::vector<Event> events_;
};

Trace concat(const Trace& a, const Trace& b);

/// Drops every nil, keeping the order of everything else.
Trace erase_nil(const Trace& t);

/// Equality modulo nil-erasure.
bool observable_eq(const Trace& a, const Trace& b);

/// "<e1,e2,...>", "<>" when empty. No spaces.
std::string format_trace(const Trace& t);

/// Inverse of format_trace. Accepts optional whitespace. Throws TermError on
/// malformed text.
Trace parse_trace(std::string_view text);

}  // namespace nilcsp

#endif  // NILCSP_TRACE_HPP_
