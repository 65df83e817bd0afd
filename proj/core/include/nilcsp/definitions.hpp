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

#ifndef NILCSP_DEFINITIONS_HPP_
#define NILCSP_DEFINITIONS_HPP_

#include <map>
#include <string>
#include <vector>

#include "nilcsp/event.hpp"
#include "nilcsp/term.hpp"

namespace nilcsp {

struct Definition {
  std::string name;
  Alphabet alphabet;
  bool alphabet_declared = false;
  Term body;
};

/// Named process equations, kept in declaration order.
class Definitions {
 public:
  /// Throws SemanticError on a duplicate name.
  void add(Definition def);

  bool contains(const std::string& name) const;
  const Definition* find(const std::string& name) const;
  /// Throws SemanticError if `name` is not defined.
  const Definition& at(const std::string& name) const;

  const std::vector<Definition>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Syntactic alphabet of `term` where each Ref contributes the declared
  /// alphabet of its definition.
  Alphabet alphabet_of(const Term& term) const;

  /// Parallel composition with operand alphabets from alphabet_of.
  Term make_parallel(Term left, Term right) const;

  /// A copy with every body desugared.
  Definitions desugared() const;

  /// Checks the definition-level invariants: bodies closed and guarded,
  /// every Ref resolves, every Ref cycle passes through a guard, and every
  /// named event of a body lies in its definition's alphabet. Throws
  /// SemanticError naming the first violation.
  void validate() const;

 private:
  std::vector<Definition> entries_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace nilcsp

#endif  // NILCSP_DEFINITIONS_HPP_
