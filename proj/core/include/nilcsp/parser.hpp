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

// Textual process language (.csp files).
//
//   file    := { def } [ expr ]
//   def     := NAME [ "alpha" "{" NAME { "," NAME } "}" ] "=" expr NEWLINE
//   expr    := par
//   par     := choice { "||" choice }
//   choice  := prefix { "|" prefix }         every alternative a prefix
//   prefix  := event "->" prefix | atom
//   atom    := "STOP" | "SKIP" | "mu" NAME "." expr | NAME | "(" expr ")"
//   event   := NAME | "nil" | "tick"
//
// "->" is right-associative and binds tightest, then "|", then "||" (left
// associative). "mu" extends as far right as possible. "#" starts a line
// comment. Newlines end a definition except inside parentheses or directly
// after an operator. The input forms "→", "∥", "‖", "μ" and "✓" are accepted
// for "->", "||", "||", "mu" and "tick".

#ifndef NILCSP_PARSER_HPP_
#define NILCSP_PARSER_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "nilcsp/definitions.hpp"
#include "nilcsp/term.hpp"

namespace nilcsp {

struct SourceFile {
  Definitions definitions;
  std::optional<Term> main;
};

/// Parses and resolves a whole file. Bodies keep their STOP/SKIP literals.
/// Throws ParseError on malformed syntax and ResolveError on unbound names,
/// nil or duplicate choice guards, alphabet violations, unguarded recursion
/// and non-prefix choice alternatives.
SourceFile parse(std::string_view input);

/// Parses a single expression against existing definitions; names resolve
/// to those definitions.
Term parse_expression(std::string_view input, const Definitions& defs = {});

/// Renders a term in the surface syntax with minimal parentheses.
std::string print(const Term& term);

/// "NAME = body", with the alphabet clause when it was declared.
std::string print_definition(const Definition& def);

}  // namespace nilcsp

#endif  // NILCSP_PARSER_HPP_
