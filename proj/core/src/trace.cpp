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

#include "nilcsp/trace.hpp"

#include <algorithm>
#include <cctype>

#include "nilcsp/error.hpp"

namespace nilcsp {

Trace Trace::extended(Event e) const {
  Trace out = *this;
  out.events_.push_back(std::move(e));
  return out;
}

Trace Trace::prefix(std::size_t n) const {
  n = std::min(n, events_.size());
  return Trace(std::vector<Event>(events_.begin(), events_.begin() + n));
}

bool Trace::is_observable() const {
  return std::none_of(events_.begin(), events_.end(),
                      [](const Event& e) { return e.is_nil(); });
}

Trace concat(const Trace& a, const Trace& b) {
  std::vector<Event> out = a.events();
  out.insert(out.end(), b.events().begin(), b.events().end());
  return Trace(std::move(out));
}

Trace erase_nil(const Trace& t) {
  std::vector<Event> out;
  out.reserve(t.size());
  std::copy_if(t.events().begin(), t.events().end(), std::back_inserter(out),
               [](const Event& e) { return !e.is_nil(); });
  return Trace(std::move(out));
}

bool observable_eq(const Trace& a, const Trace& b) {
  return erase_nil(a) == erase_nil(b);
}

std::string format_trace(const Trace& t) {
  std::string out = "<";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += t[i].label();
  }
  out += '>';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Trace parse_trace(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '<' || text.back() != '>') {
    throw TermError("trace must be written <e1,e2,...>");
  }
  text = trim(text.substr(1, text.size() - 2));
  Trace out;
  if (text.empty()) return out;
  for (;;) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    if (item == "nil") {
      out.push_back(Event::nil());
    } else if (item == "tick") {
      out.push_back(Event::tick());
    } else {
      out.push_back(Event::named(item));
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace nilcsp
