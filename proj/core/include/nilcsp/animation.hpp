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

#ifndef NILCSP_ANIMATION_HPP_
#define NILCSP_ANIMATION_HPP_

#include <iosfwd>
#include <vector>

#include "nilcsp/definitions.hpp"
#include "nilcsp/semantics.hpp"
#include "nilcsp/term.hpp"
#include "nilcsp/trace.hpp"

namespace nilcsp {

/// A running process driven by an environment that picks observable events.
/// Silent steps are taken implicitly; the recorded trace never holds nil.
///
/// When several terms in the silent closure offer the chosen event, the
/// successor is the first in observable_step order. All such successors are
/// trace-equivalent for terms obeying the distinct-guard rule.
class Animation {
 public:
  /// `defs` must be desugared and `initial` closed and desugared.
  Animation(Definitions defs, Term initial);

  const Term& current() const { return current_; }
  const Term& initial() const { return initial_; }
  const Trace& trace() const { return trace_; }
  const Definitions& definitions() const { return defs_; }
  Status status() const { return status_; }
  /// Distinct observable labels offered now, sorted.
  const std::vector<Event>& menu() const { return menu_; }

  /// Takes `label` if offered; returns false and leaves the state unchanged
  /// otherwise.
  bool step(Event label);
  void reset();

 private:
  void refresh();

  Definitions defs_;
  Term initial_;
  Term current_;
  Trace trace_;
  TransitionSet offers_;
  std::vector<Event> menu_;
  Status status_ = Status::Quiescent;
};

/// Terminal front end: shows the trace, status and numbered menu, reads a
/// choice per line from `in`. "q" or end of input quits. Returns when the
/// process becomes quiescent (after printing "STOPPED (only nil remains)")
/// or the user quits.
void run_animator(Animation& animation, std::istream& in, std::ostream& out);

}  // namespace nilcsp

#endif  // NILCSP_ANIMATION_HPP_
