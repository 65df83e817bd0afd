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

// Labelled transition semantics over closed, desugared process terms.
//
// Transition rules:
//   prefix     e -> P offers (e, P), for any event e including nil and tick.
//   choice     one transition per branch, labelled by its guard.
//   unfolding  mu terms and references take the transitions of their
//              unfolding / definition body; unfolding itself is unlabelled.
//   parallel   named events in both operand alphabets synchronize; events in
//              one alphabet only are taken by that side alone; nil is taken
//              by either side independently and never synchronizes.
// A tick arising under parallel composition is a SemanticError.
//
// Every entry point requires terms without STOP/SKIP literals and with every
// Ref resolvable in the given Definitions.

#ifndef NILCSP_SEMANTICS_HPP_
#define NILCSP_SEMANTICS_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "nilcsp/definitions.hpp"
#include "nilcsp/term.hpp"
#include "nilcsp/trace.hpp"

namespace nilcsp {

struct Transition {
  Event label;
  Term successor;
};

/// Sorted by (label, canonical successor) and free of duplicates.
using TransitionSet = std::vector<Transition>;

/// Distinct labels of a transition set, in order.
std::vector<Event> labels_of(const TransitionSet& transitions);

enum class Status { Live, Quiescent, Terminating };

/// "live", "quiescent" or "terminating".
std::string_view to_string(Status status);

struct TraceSet {
  std::set<Trace> traces;
  std::size_t depth = 0;
  bool truncated = false;
};

struct EquivalenceResult {
  bool equivalent = true;
  /// A shortest trace in the symmetric difference; the lexicographically
  /// least among those. Empty when equivalent.
  std::optional<Trace> witness;
};

/// Upper bound on the number of distinct terms a silent closure may visit.
/// Guarded terms without recursion through parallel composition stay far
/// below it; exceeding it raises SemanticError.
inline constexpr std::size_t kMaxSilentClosure = 1 << 10;

TransitionSet step(const Term& term, const Definitions& defs);

/// Terms reachable through zero or more nil transitions, in discovery order,
/// deduplicated modulo renaming of binders. `term` comes first.
std::vector<Term> silent_closure(const Term& term, const Definitions& defs);

/// Non-nil transitions of every term in the silent closure.
TransitionSet observable_step(const Term& term, const Definitions& defs);

/// Observable traces of length at most `depth`. `truncated` is set when a
/// term reached after `depth` observable events can still do something.
TraceSet observable_traces(const Term& term, const Definitions& defs,
                           std::size_t depth);

Status classify(const Term& term, const Definitions& defs);

EquivalenceResult trace_equiv(const Term& a, const Term& b,
                              const Definitions& defs, std::size_t depth);

/// Throws std::logic_error unless the set contains <>, is prefix-closed and
/// holds no nil.
void check_trace_set(const TraceSet& traces);

}  // namespace nilcsp

#endif  // NILCSP_SEMANTICS_HPP_
