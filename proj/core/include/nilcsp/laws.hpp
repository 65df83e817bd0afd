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

// The nil laws as rewrite rules, and a randomized harness that checks each
// law against the trace semantics.
//
// Process laws:
//   L1  nil -> (x -> P)        = x -> P
//   L2  x -> (nil -> P)        = x -> P
//   L3  nil -> P               = P
//   L4  nil -> P               != STOP   (for P with an observable first event)
//   L5  (nil -> P) || (nil -> Q) = P || Q
//   L6  (nil -> P) || (x -> Q)   = P || (x -> Q)
// Trace laws:
//   T1  <nil> = <>              T2  <nil,...,nil> = <>
//   T3  <x><nil> = <x>          T4  <nil><x> = <x>
//   T5  <x><nil><y> = <x,y>

#ifndef NILCSP_LAWS_HPP_
#define NILCSP_LAWS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilcsp/term.hpp"
#include "nilcsp/trace.hpp"

namespace nilcsp {

enum class LawId { L1, L2, L3, L4, L5, L6, T1, T2, T3, T4, T5 };

inline constexpr std::array<LawId, 11> kAllLaws = {
    LawId::L1, LawId::L2, LawId::L3, LawId::L4, LawId::L5, LawId::L6,
    LawId::T1, LawId::T2, LawId::T3, LawId::T4, LawId::T5};

std::string_view to_string(LawId law);
std::optional<LawId> law_from_string(std::string_view text);

struct RewriteStep {
  LawId law;
  /// Child indices from the root to the rewritten node.
  std::vector<std::size_t> position;
  Term before;
  Term after;
};

/// Applies one law at the outermost, leftmost position where one of L3, L2,
/// L5, L6 (tried in that order) matches. L1 is the instance of L3 with
/// P = x -> Q. A rewrite that would leave a recursion variable unguarded is
/// skipped, so the sole guard of mu X . nil -> X survives. Mu bodies are
/// rewritten in place; Refs are opaque.
std::optional<std::pair<Term, RewriteStep>> rewrite_once(const Term& term);

struct Normalization {
  Term term;
  std::vector<RewriteStep> steps;
};

/// rewrite_once to a fixpoint. Each step removes at least one nil prefix, so
/// the number of steps is bounded by nil_prefix_count(term).
Normalization normalize(const Term& term);

struct Counterexample {
  std::string instance;
  std::optional<Trace> witness;
};

struct LawReport {
  LawId law;
  std::size_t instances_checked = 0;
  std::vector<Counterexample> counterexamples;
  bool passed = true;
  std::string note;
};

struct LawCheckOptions {
  std::size_t samples = 1000;
  std::size_t size_bound = 6;
  std::size_t depth = 6;
  std::uint64_t seed = 42;
};

/// Checks `law` on `samples` generated instantiations. Process laws compare
/// observable trace sets up to `depth`; trace laws compare nil-erasures of
/// generated raw traces. Deterministic for a given seed.
LawReport check_law(LawId law, const LawCheckOptions& options);

/// The alphabet the harness draws events from.
const Alphabet& law_alphabet();

/// One line per report: "L3 passed 1000 instances" or
/// "L3 FAILED 2/1000 instances", followed by indented counterexamples.
std::string render_text(const std::vector<LawReport>& reports);

/// JSON array of {law, instances, passed, counterexamples[{term, witness}]}.
/// A report with a note carries it as a trailing "note" key.
std::string render_json(const std::vector<LawReport>& reports);

}  // namespace nilcsp

#endif  // NILCSP_LAWS_HPP_
