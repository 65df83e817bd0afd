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

#ifndef NILCSP_ERROR_HPP_
#define NILCSP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace nilcsp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ill-formed term construction: bad event label, nil or duplicate choice
// guard, choice with fewer than two branches.
class TermError : public Error {
 public:
  using Error::Error;
};

// Raised by the semantics when a term cannot be executed: free variables,
// unresolved references, surface literals that were never desugared, or a
// tick transition arising under parallel composition.
class SemanticError : public Error {
 public:
  using Error::Error;
};

// Syntax error in the textual process language. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string message,
             std::vector<std::string> expected = {});

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::string message_;
  std::vector<std::string> expected_;
};

// Well-formed syntax that names something that does not resolve, or breaks a
// term invariant (nil guard, duplicate guard, alphabet violation, unguarded
// recursion). Carries the position of the offending token.
class ResolveError : public Error {
 public:
  ResolveError(int line, int column, std::string message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace nilcsp

#endif  // NILCSP_ERROR_HPP_
