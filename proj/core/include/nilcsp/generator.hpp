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

#ifndef NILCSP_GENERATOR_HPP_
#define NILCSP_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nilcsp/event.hpp"
#include "nilcsp/term.hpp"
#include "nilcsp/trace.hpp"

namespace nilcsp {

/// Deterministic stream of random closed, guarded terms for property checks.
///
/// Terms are drawn as surface terms with at most `size_bound` operators
/// (prefix, choice, parallel, mu; STOP and SKIP count as constants) and then
/// desugared. Recursion variables never occur under a parallel operator, and
/// parallel operands never contain tick, so every generated term has a finite
/// silent closure and executes without SemanticError.
///
/// Only std::mt19937_64 output is consumed, never a std distribution, so a
/// seed yields the same stream on every platform.
class TermGenerator {
 public:
  /// Throws std::invalid_argument if size_bound is 0 or the alphabet empty.
  TermGenerator(std::uint64_t seed, std::size_t size_bound, Alphabet alphabet);

  Term next() { return desugar(next_surface()); }
  Term next_tick_free() { return desugar(next_surface_tick_free()); }

  Term next_surface();
  Term next_surface_tick_free();

  /// Uniform in [0, n).
  std::size_t below(std::size_t n);
  Event next_named();
  /// Raw trace of length at most `max_length` over the alphabet, nil and tick.
  Trace next_raw_trace(std::size_t max_length);

  const Alphabet& alphabet() const { return alphabet_; }

 private:
  struct Scope {
    std::vector<std::pair<std::string, bool>> vars;  // name, guarded
    bool tick_allowed = true;
  };

  Term gen(std::size_t budget, Scope scope);
  Term leaf(const Scope& scope);
  Event pick_event(const Scope& scope, bool allow_nil);
  std::string fresh_binder();

  std::mt19937_64 rng_;
  std::size_t size_bound_;
  Alphabet alphabet_;
  std::vector<Event> named_;
  std::size_t binder_counter_ = 0;
};

/// The first `count` terms of the stream for (seed, size_bound, alphabet).
std::vector<Term> gen_terms(std::uint64_t seed, std::size_t size_bound,
                            const Alphabet& alphabet, std::size_t count);

}  // namespace nilcsp

#endif  // NILCSP_GENERATOR_HPP_
