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

#include "nilcsp/animation.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace nilcsp {

Animation::Animation(Definitions defs, Term initial)
    : defs_(std::move(defs)), initial_(initial), current_(std::move(initial)) {
  refresh();
}

void Animation::refresh() {
  offers_ = observable_step(current_, defs_);
  menu_ = labels_of(offers_);
  status_ = classify(current_, defs_);
}

bool Animation::step(Event label) {
  for (const auto& tr : offers_) {
    if (tr.label == label) {
      current_ = tr.successor;
      trace_.push_back(label);
      refresh();
      return true;
    }
  }
  return false;
}

void Animation::reset() {
  current_ = initial_;
  trace_ = Trace{};
  refresh();
}

void run_animator(Animation& animation, std::istream& in, std::ostream& out) {
  for (;;) {
    out << "trace: " << format_trace(animation.trace()) << '\n';
    out << "status: " << to_string(animation.status()) << '\n';
    if (animation.status() == Status::Quiescent) {
      out << "STOPPED (only nil remains)\n";
      return;
    }
    const auto& menu = animation.menu();
    for (std::size_t i = 0; i < menu.size(); ++i) {
      out << "  " << (i + 1) << ") " << menu[i].label() << '\n';
    }
    out << "choose 1-" << menu.size() << " or q> " << std::flush;

    std::string line;
    if (!std::getline(in, line)) {
      out << '\n';
      return;
    }
    auto first = line.find_first_not_of(" \t\r");
    auto last = line.find_last_not_of(" \t\r");
    line = first == std::string::npos ? "" : line.substr(first, last - first + 1);
    if (line == "q") return;

    std::size_t choice = 0;
    try {
      std::size_t used = 0;
      choice = std::stoul(line, &used);
      if (used != line.size()) choice = 0;
    } catch (const std::exception&) {
      choice = 0;
    }
    if (choice < 1 || choice > menu.size()) {
      out << "no such choice: '" << line << "'\n";
      continue;
    }
    animation.step(menu[choice - 1]);
  }
}

}  // namespace nilcsp
