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

#include <ostream>

#include "nilcsp/parser.hpp"

namespace nilcsp {

namespace {

enum Level { kPar = 0, kChoice = 1, kPrefix = 2 };

// `followed`: more operator text comes after this term at an enclosing
// level, so a trailing mu must be closed off with parentheses.
void emit(const Term& t, Level level, bool followed, std::string& out) {
  switch (t.kind()) {
    case TermKind::Prefix:
      out += t.event().label();
      out += " -> ";
      emit(t.rest(), kPrefix, followed, out);
      return;
    case TermKind::Choice: {
      bool paren = level > kChoice;
      if (paren) out += '(';
      const auto& guards = t.guards();
      for (std::size_t i = 0; i < guards.size(); ++i) {
        if (i) out += " | ";
        out += guards[i].label();
        out += " -> ";
        bool last = i + 1 == guards.size();
        emit(t.child(i), kPrefix, !last || (!paren && followed), out);
      }
      if (paren) out += ')';
      return;
    }
    case TermKind::Parallel: {
      bool paren = level > kPar;
      if (paren) out += '(';
      emit(t.left(), kPar, true, out);
      out += " || ";
      emit(t.right(), kChoice, !paren && followed, out);
      if (paren) out += ')';
      return;
    }
    case TermKind::Mu:
      if (followed) out += '(';
      out += "mu ";
      out += t.name();
      out += " . ";
      emit(t.body(), kPar, false, out);
      if (followed) out += ')';
      return;
    case TermKind::Var:
    case TermKind::Ref:
      out += t.name();
      return;
    case TermKind::StopLit:
      out += "STOP";
      return;
    case TermKind::SkipLit:
      out += "SKIP";
      return;
  }
}

}  // namespace

std::string print(const Term& term) {
  std::string out;
  emit(term, kPar, false, out);
  return out;
}

std::string print_definition(const Definition& def) {
  std::string out = def.name;
  if (def.alphabet_declared) {
    out += " alpha ";
    out += to_string(def.alphabet);
  }
  out += " = ";
  out += print(def.body);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& term) {
  return os << print(term);
}

}  // namespace nilcsp
