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

// Process terms: an immutable, structurally shared AST.
//
// Terms are values. Every node is allocated once and never mutated, so a Term
// may be copied and shared across threads freely. Equality is structural up
// to renaming of mu binders.

#ifndef NILCSP_TERM_HPP_
#define NILCSP_TERM_HPP_

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "nilcsp/event.hpp"

namespace nilcsp {

enum class TermKind { Prefix, Choice, Parallel, Mu, Var, Ref, StopLit, SkipLit };

struct Branch;

class Term {
 public:
  struct Node;

  static Term prefix(Event event, Term rest);
  /// Guarded choice. Throws TermError on fewer than two branches, a nil
  /// guard, or two branches sharing a guard.
  static Term choice(std::vector<Branch> branches);
  /// Parallel composition whose operand alphabets are the operands'
  /// syntactic alphabets.
  static Term parallel(Term left, Term right);
  static Term parallel(Term left, Term right, Alphabet left_alphabet,
                       Alphabet right_alphabet);
  static Term mu(std::string binder, Term body);
  static Term var(std::string name);
  static Term ref(std::string name);
  static Term stop();
  static Term skip();

  TermKind kind() const;
  bool is(TermKind k) const { return kind() == k; }

  // Prefix
  const Event& event() const;
  const Term& rest() const;
  // Choice
  const std::vector<Event>& guards() const;
  std::vector<Branch> branches() const;
  // Parallel
  const Term& left() const;
  const Term& right() const;
  const Alphabet& left_alphabet() const;
  const Alphabet& right_alphabet() const;
  // Mu binder, Var and Ref names
  const std::string& name() const;
  // Mu
  const Term& body() const;

  /// Uniform child access: Prefix rest, Choice branch rests, Parallel
  /// left/right, Mu body. Leaves have none.
  std::size_t child_count() const;
  const Term& child(std::size_t i) const;
  /// A copy of this node with child `i` replaced. Guards, binders and
  /// parallel alphabets are kept.
  Term with_child(std::size_t i, Term replacement) const;

  /// Pointer identity; cheaper than structural equality.
  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Branch {
  Event guard;
  Term rest;
};

struct Term::Node {
  TermKind kind;
  Event event = Event::nil();
  std::string name;
  std::vector<Term> children;
  std::vector<Event> guards;
  Alphabet left_alphabet;
  Alphabet right_alphabet;
};

/// Replaces every free occurrence of Var(var) in `term` by `replacement`.
/// `replacement` must be closed, which rules out capture.
Term substitute(const Term& term, const std::string& var,
                const Term& replacement);

/// One mu-unfolding: body[binder := whole term]. Throws TermError if `mu`
/// is not a Mu node.
Term unfold(const Term& mu);

/// Replaces STOP by mu X . nil -> X and SKIP by mu X . tick -> X, choosing
/// binder names not already used in the term.
Term desugar(const Term& term);

/// Named events used as prefixes or guards anywhere in the term. Ref nodes
/// contribute nothing; use Definitions::alphabet_of to include them.
Alphabet syntactic_alphabet(const Term& term);

/// A string that is equal for two terms iff they are equal up to renaming of
/// mu binders. Bound variables are rendered as de Bruijn indices.
std::string canonical_key(const Term& term);

std::set<std::string> free_variables(const Term& term);
bool is_closed(const Term& term);

/// Every bound Var lies beneath at least one Prefix or Choice guard between
/// it and its binder.
bool is_guarded(const Term& term);

bool contains_surface_literals(const Term& term);

/// Count of Prefix, Choice, Parallel and Mu nodes.
std::size_t operator_count(const Term& term);
/// Count of Prefix nodes whose event is nil.
std::size_t nil_prefix_count(const Term& term);

/// Throws TermError unless the term is closed and guarded.
void validate(const Term& term);

/// Uses the surface printer.
std::ostream& operator<<(std::ostream& os, const Term& term);

}  // namespace nilcsp

#endif  // NILCSP_TERM_HPP_
