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

#include "nilcsp/definitions.hpp"

#include <functional>
#include <set>

#include "nilcsp/error.hpp"

namespace nilcsp {

void Definitions::add(Definition def) {
  if (index_.contains(def.name)) {
    throw SemanticError("duplicate definition '" + def.name + "'");
  }
  index_.emplace(def.name, entries_.size());
  entries_.push_back(std::move(def));
}

bool Definitions::contains(const std::string& name) const {
  return index_.contains(name);
}

const Definition* Definitions::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const Definition& Definitions::at(const std::string& name) const {
  if (const auto* d = find(name)) return *d;
  throw SemanticError("unbound process '" + name + "'");
}

Alphabet Definitions::alphabet_of(const Term& term) const {
  Alphabet out = syntactic_alphabet(term);
  std::function<void(const Term&)> visit = [&](const Term& t) {
    if (t.is(TermKind::Ref)) {
      if (const auto* d = find(t.name())) out.insert_all(d->alphabet);
      return;
    }
    for (std::size_t i = 0; i < t.child_count(); ++i) visit(t.child(i));
  };
  visit(term);
  return out;
}

Term Definitions::make_parallel(Term left, Term right) const {
  Alphabet la = alphabet_of(left);
  Alphabet ra = alphabet_of(right);
  return Term::parallel(std::move(left), std::move(right), std::move(la),
                        std::move(ra));
}

Definitions Definitions::desugared() const {
  Definitions out;
  for (const auto& d : entries_) {
    out.add({d.name, d.alphabet, d.alphabet_declared, desugar(d.body)});
  }
  return out;
}

namespace {

// Refs reachable from `t` without passing a Prefix or Choice.
void unguarded_refs(const Term& t, std::set<std::string>& out) {
  if (t.is(TermKind::Prefix) || t.is(TermKind::Choice)) return;
  if (t.is(TermKind::Ref)) {
    out.insert(t.name());
    return;
  }
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    unguarded_refs(t.child(i), out);
  }
}

void all_refs(const Term& t, std::set<std::string>& out) {
  if (t.is(TermKind::Ref)) out.insert(t.name());
  for (std::size_t i = 0; i < t.child_count(); ++i) all_refs(t.child(i), out);
}

}  // namespace

void Definitions::validate() const {
  for (const auto& d : entries_) {
    auto free = free_variables(d.body);
    if (!free.empty()) {
      throw SemanticError("definition '" + d.name + "': unbound variable '" +
                          *free.begin() + "'");
    }
    if (!is_guarded(d.body)) {
      throw SemanticError("definition '" + d.name + "': unguarded recursion");
    }
    std::set<std::string> refs;
    all_refs(d.body, refs);
    for (const auto& r : refs) {
      if (!contains(r)) {
        throw SemanticError("definition '" + d.name +
                            "': unbound process '" + r + "'");
      }
    }
    for (const auto& e : syntactic_alphabet(d.body)) {
      if (!d.alphabet.contains(e)) {
        throw SemanticError("definition '" + d.name + "': event '" +
                            e.label() + "' is not in its alphabet " +
                            to_string(d.alphabet));
      }
    }
  }

  // Depth-first search for a cycle of unguarded references.
  std::map<std::string, std::set<std::string>> graph;
  for (const auto& d : entries_) unguarded_refs(d.body, graph[d.name]);
  enum class Mark { White, Grey, Black };
  std::map<std::string, Mark> mark;
  std::function<void(const std::string&)> dfs = [&](const std::string& n) {
    mark[n] = Mark::Grey;
    for (const auto& m : graph[n]) {
      if (mark[m] == Mark::Grey) {
        throw SemanticError("unguarded reference cycle through '" + m + "'");
      }
      if (mark[m] == Mark::White) dfs(m);
    }
    mark[n] = Mark::Black;
  };
  for (const auto& d : entries_) {
    if (mark[d.name] == Mark::White) dfs(d.name);
  }
}

}  // namespace nilcsp
