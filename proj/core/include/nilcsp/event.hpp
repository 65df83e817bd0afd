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

#ifndef NILCSP_EVENT_HPP_
#define NILCSP_EVENT_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

namespace nilcsp {

/// An interaction label. `nil` is the silent event every process may take
/// without leaving a record; `tick` signals successful termination.
class Event {
 public:
  enum class Kind { Named, Nil, Tick };

  /// Throws TermError unless `label` matches [a-zA-Z][a-zA-Z0-9_]* and is not
  /// a reserved word.
  static Event named(std::string_view label);
  static Event nil() { return Event(Kind::Nil, "nil"); }
  static Event tick() { return Event(Kind::Tick, "tick"); }

  Kind kind() const { return kind_; }
  bool is_named() const { return kind_ == Kind::Named; }
  bool is_nil() const { return kind_ == Kind::Nil; }
  bool is_tick() const { return kind_ == Kind::Tick; }

  /// The textual spelling; "nil" and "tick" for the distinguished events.
  const std::string& label() const { return label_; }

  friend bool operator==(const Event& a, const Event& b) {
    return a.kind_ == b.kind_ && a.label_ == b.label_;
  }
  // Ordered by spelling. Named labels never collide with "nil" or "tick".
  friend std::strong_ordering operator<=>(const Event& a, const Event& b) {
    return a.label_ <=> b.label_;
  }

 private:
  Event(Kind kind, std::string label) : kind_(kind), label_(std::move(label)) {}

  Kind kind_;
  std::string label_;
};

/// True for identifiers usable as event labels or process names.
bool is_valid_identifier(std::string_view text);

/// True for the words the surface language reserves.
bool is_reserved_word(std::string_view text);

/// A finite set of named events. nil and tick belong to every alphabet
/// implicitly and are never stored.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<Event> events);

  /// Adds a named event; nil and tick are ignored.
  void insert(const Event& e);
  void insert_all(const Alphabet& other);

  bool contains(const Event& e) const;
  bool empty() const { return events_.empty(); }
  std::size_t size() const { return events_.size(); }

  const std::set<Event>& events() const { return events_; }
  auto begin() const { return events_.begin(); }
  auto end() const { return events_.end(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::set<Event> events_;
};

/// Renders "{a,b,c}".
std::string to_string(const Alphabet& alphabet);

}  // namespace nilcsp

#endif  // NILCSP_EVENT_HPP_
