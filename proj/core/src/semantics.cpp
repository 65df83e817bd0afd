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

#include "nilcsp/semantics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "nilcsp/error.hpp"

namespace nilcsp {

namespace {

// With `silent_only`, collects just the nil transitions. Closure computation
// needs nothing else, and skipping the rest keeps nested parallels linear.
void collect_steps(const Term& t, const Definitions& defs,
                   std::vector<Transition>& out, bool silent_only = false) {
  switch (t.kind()) {
    case TermKind::Prefix:
      if (!silent_only || t.event().is_nil()) {
        out.push_back({t.event(), t.rest()});
      }
      return;
    case TermKind::Choice: {
      if (silent_only) return;  // guards are never nil
      const auto& guards = t.guards();
      for (std::size_t i = 0; i < guards.size(); ++i) {
        out.push_back({guards[i], t.child(i)});
      }
      return;
    }
    case TermKind::Mu:
      collect_steps(unfold(t), defs, out, silent_only);
      return;
    case TermKind::Ref:
      collect_steps(defs.at(t.name()).body, defs, out, silent_only);
      return;
    case TermKind::Var:
      throw SemanticError("free variable '" + t.name() + "'");
    case TermKind::StopLit:
    case TermKind::SkipLit:
      throw SemanticError("STOP/SKIP must be desugared before execution");
    case TermKind::Parallel:
      break;
  }

  std::vector<Transition> left;
  std::vector<Transition> right;
  collect_steps(t.left(), defs, left, silent_only);
  collect_steps(t.right(), defs, right, silent_only);
  for (const auto* side : {&left, &right}) {
    for (const auto& tr : *side) {
      if (tr.label.is_tick()) {
        throw SemanticError(
            "tick under parallel composition is not supported");
      }
    }
  }
  const Alphabet& la = t.left_alphabet();
  const Alphabet& ra = t.right_alphabet();
  auto par = [&](const Term& l, const Term& r) {
    return Term::parallel(l, r, la, ra);
  };

  for (const auto& l : left) {
    if (l.label.is_nil()) {
      out.push_back({l.label, par(l.successor, t.right())});
    } else if (ra.contains(l.label)) {
      for (const auto& r : right) {
        if (r.label == l.label) {
          out.push_back({l.label, par(l.successor, r.successor)});
        }
      }
    } else {
      out.push_back({l.label, par(l.successor, t.right())});
    }
  }
  for (const auto& r : right) {
    if (r.label.is_nil()) {
      out.push_back({r.label, par(t.left(), r.successor)});
    } else if (!la.contains(r.label)) {
      out.push_back({r.label, par(t.left(), r.successor)});
    }
  }
}

TransitionSet normalize_set(std::vector<Transition> items) {
  std::vector<std::pair<std::string, Transition>> keyed;
  keyed.reserve(items.size());
  for (auto& tr : items) {
    keyed.emplace_back(canonical_key(tr.successor), std::move(tr));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.label != b.second.label) {
      return a.second.label < b.second.label;
    }
    return a.first < b.first;
  });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) {
                            return a.second.label == b.second.label &&
                                   a.first == b.first;
                          }),
              keyed.end());
  TransitionSet out;
  out.reserve(keyed.size());
  for (auto& [key, tr] : keyed) out.push_back(std::move(tr));
  return out;
}

// Keyed by canonical form so that the iteration order is deterministic.
using StateSet = std::map<std::string, Term>;

class Explorer {
 public:
  explicit Explorer(const Definitions& defs) : defs_(defs) {}

  const std::vector<Term>& closure(const Term& term, std::string key) {
    auto it = closures_.find(key);
    if (it != closures_.end()) return it->second;

    std::vector<Term> order;
    std::unordered_set<std::string> seen;
    std::deque<Term> queue;
    seen.insert(key);
    queue.push_back(term);
    while (!queue.empty()) {
      Term t = std::move(queue.front());
      queue.pop_front();
      std::vector<Transition> silent;
      collect_steps(t, defs_, silent, true);
      for (auto& tr : silent) {
        if (seen.insert(canonical_key(tr.successor)).second) {
          if (seen.size() > kMaxSilentClosure) {
            throw SemanticError(
                "silent closure exceeds " + std::to_string(kMaxSilentClosure) +
                " terms; recursion through parallel composition?");
          }
          queue.push_back(tr.successor);
        }
      }
      order.push_back(std::move(t));
    }
    return closures_.emplace(std::move(key), std::move(order)).first->second;
  }

  const std::vector<Term>& closure(const Term& term) {
    return closure(term, canonical_key(term));
  }

  std::vector<Transition> transitions(const Term& t) {
    std::vector<Transition> out;
    collect_steps(t, defs_, out);
    return out;
  }

  void add_closure(const Term& t, StateSet& into) {
    for (const auto& c : closure(t)) into.emplace(canonical_key(c), c);
  }

  // Successor state sets per observable label.
  std::map<Event, StateSet> advance(const StateSet& states) {
    std::map<Event, StateSet> out;
    for (const auto& [key, s] : states) {
      for (auto& tr : transitions(s)) {
        if (tr.label.is_nil()) continue;
        add_closure(tr.successor, out[tr.label]);
      }
    }
    return out;
  }

  bool offers_observable(const StateSet& states) {
    for (const auto& [key, s] : states) {
      for (const auto& tr : transitions(s)) {
        if (!tr.label.is_nil()) return true;
      }
    }
    return false;
  }

 private:
  const Definitions& defs_;
  std::unordered_map<std::string, std::vector<Term>> closures_;
};

}  // namespace

std::vector<Event> labels_of(const TransitionSet& transitions) {
  std::vector<Event> out;
  for (const auto& tr : transitions) {
    if (out.empty() || out.back() != tr.label) out.push_back(tr.label);
  }
  return out;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Live:
      return "live";
    case Status::Quiescent:
      return "quiescent";
    case Status::Terminating:
      return "terminating";
  }
  return "unknown";
}

TransitionSet step(const Term& term, const Definitions& defs) {
  std::vector<Transition> out;
  collect_steps(term, defs, out);
  return normalize_set(std::move(out));
}

std::vector<Term> silent_closure(const Term& term, const Definitions& defs) {
  Explorer explorer(defs);
  return explorer.closure(term);
}

TransitionSet observable_step(const Term& term, const Definitions& defs) {
  Explorer explorer(defs);
  std::vector<Transition> out;
  for (const auto& t : explorer.closure(term)) {
    for (auto& tr : explorer.transitions(t)) {
      if (!tr.label.is_nil()) out.push_back(std::move(tr));
    }
  }
  return normalize_set(std::move(out));
}

TraceSet observable_traces(const Term& term, const Definitions& defs,
                           std::size_t depth) {
  Explorer explorer(defs);
  TraceSet result;
  result.depth = depth;
  result.traces.insert(Trace{});

  std::map<Trace, StateSet> frontier;
  explorer.add_closure(term, frontier[Trace{}]);
  for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
    std::map<Trace, StateSet> next;
    for (const auto& [trace, states] : frontier) {
      for (auto& [label, successors] : explorer.advance(states)) {
        Trace extended = trace.extended(label);
        result.traces.insert(extended);
        next.emplace(std::move(extended), std::move(successors));
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [trace, states] : frontier) {
    if (explorer.offers_observable(states)) {
      result.truncated = true;
      break;
    }
  }
  check_trace_set(result);
  return result;
}

Status classify(const Term& term, const Definitions& defs) {
  auto transitions = observable_step(term, defs);
  if (transitions.empty()) return Status::Quiescent;
  bool all_tick = std::all_of(transitions.begin(), transitions.end(),
                              [](const auto& tr) { return tr.label.is_tick(); });
  return all_tick ? Status::Terminating : Status::Live;
}

EquivalenceResult trace_equiv(const Term& a, const Term& b,
                              const Definitions& defs, std::size_t depth) {
  auto ta = observable_traces(a, defs, depth);
  auto tb = observable_traces(b, defs, depth);
  EquivalenceResult result;
  if (ta.traces == tb.traces) return result;

  std::vector<Trace> diff;
  std::set_symmetric_difference(ta.traces.begin(), ta.traces.end(),
                                tb.traces.begin(), tb.traces.end(),
                                std::back_inserter(diff));
  result.equivalent = false;
  result.witness = *std::min_element(
      diff.begin(), diff.end(), [](const Trace& x, const Trace& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
      });
  return result;
}

void check_trace_set(const TraceSet& traces) {
  if (!traces.traces.contains(Trace{})) {
    throw std::logic_error("trace set lacks the empty trace");
  }
  for (const auto& t : traces.traces) {
    if (!t.is_observable()) {
      throw std::logic_error("trace set holds nil: " + format_trace(t));
    }
    if (t.size() > traces.depth) {
      throw std::logic_error("trace longer than depth: " + format_trace(t));
    }
    if (!t.empty() && !traces.traces.contains(t.prefix(t.size() - 1))) {
      throw std::logic_error("trace set not prefix-closed at " +
                             format_trace(t));
    }
  }
}

}  // namespace nilcsp
