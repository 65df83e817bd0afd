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

#include "nilcsp/event.hpp"

#include <array>
#include <cctype>

#include "nilcsp/error.hpp"

namespace nilcsp {

ParseError::ParseError(int line, int column, std::string message,
                       std::vector<std::string> expected)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

ResolveError::ResolveError(int line, int column, std::string message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

bool is_valid_identifier(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) {
    return false;
  }
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_') return false;
  }
  return true;
}

bool is_reserved_word(std::string_view text) {
  static constexpr std::array<std::string_view, 6> kReserved = {
      "STOP", "SKIP", "mu", "nil", "tick", "alpha"};
  for (auto w : kReserved) {
    if (w == text) return true;
  }
  return false;
}

Event Event::named(std::string_view label) {
  if (!is_valid_identifier(label)) {
    throw TermError("invalid event label '" + std::string(label) + "'");
  }
  if (is_reserved_word(label)) {
    throw TermError("'" + std::string(label) +
                    "' is reserved and cannot name an event");
  }
  return Event(Kind::Named, std::string(label));
}

Alphabet::Alphabet(std::initializer_list<Event> events) {
  for (const auto& e : events) insert(e);
}

void Alphabet::insert(const Event& e) {
  if (e.is_named()) events_.insert(e);
}

void Alphabet::insert_all(const Alphabet& other) {
  events_.insert(other.events_.begin(), other.events_.end());
}

bool Alphabet::contains(const Event& e) const {
  return !e.is_named() || events_.contains(e);
}

std::string to_string(const Alphabet& alphabet) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : alphabet) {
    if (!first) out += ',';
    first = false;
    out += e.label();
  }
  out += '}';
  return out;
}

}  // namespace nilcsp
