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

#include "nilcsp/term.hpp"

#include <algorithm>
#include <cassert>

#include "nilcsp/error.hpp"

namespace nilcsp {

namespace {

std::shared_ptr<Term::Node> make_node(TermKind kind) {
  auto n = std::make_shared<Term::Node>();
  n->kind = kind;
  return n;
}

}  // namespace

Term Term::prefix(Event event, Term rest) {
  auto n = make_node(TermKind::Prefix);
  n->event = std::move(event);
  n->children.push_back(std::move(rest));
  return Term(std::move(n));
}

Term Term::choice(std::vector<Branch> branches) {
  if (branches.size() < 2) {
    throw TermError("choice needs at least two branches");
  }
  auto n = make_node(TermKind::Choice);
  for (auto& b : branches) {
    if (b.guard.is_nil()) {
      throw TermError("nil cannot guard a choice branch");
    }
    if (std::find(n->guards.begin(), n->guards.end(), b.guard) !=
        n->guards.end()) {
      throw TermError("duplicate choice guard '" + b.guard.label() + "'");
    }
    n->guards.push_back(b.guard);
    n->children.push_back(std::move(b.rest));
  }
  return Term(std::move(n));
}

Term Term::parallel(Term left, Term right) {
  Alphabet la = syntactic_alphabet(left);
  Alphabet ra = syntactic_alphabet(right);
  return parallel(std::move(left), std::move(right), std::move(la),
                  std::move(ra));
}

Term Term::parallel(Term left, Term right, Alphabet left_alphabet,
                    Alphabet right_alphabet) {
  auto n = make_node(TermKind::Parallel);
  n->children.push_back(std::move(left));
  n->children.push_back(std::move(right));
  n->left_alphabet = std::move(left_alphabet);
  n->right_alphabet = std::move(right_alphabet);
  return Term(std::move(n));
}

Term Term::mu(std::string binder, Term body) {
  if (!is_valid_identifier(binder) || is_reserved_word(binder)) {
    throw TermError("invalid mu binder '" + binder + "'");
  }
  auto n = make_node(TermKind::Mu);
  n->name = std::move(binder);
  n->children.push_back(std::move(body));
  return Term(std::move(n));
}

Term Term::var(std::string name) {
  auto n = make_node(TermKind::Var);
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::ref(std::string name) {
  auto n = make_node(TermKind::Ref);
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::stop() {
  static const Term kStop(make_node(TermKind::StopLit));
  return kStop;
}

Term Term::skip() {
  static const Term kSkip(make_node(TermKind::SkipLit));
  return kSkip;
}

TermKind Term::kind() const { return node_->kind; }

const Event& Term::event() const {
  assert(is(TermKind::Prefix));
  return node_->event;
}

const Term& Term::rest() const {
  assert(is(TermKind::Prefix));
  return node_->children[0];
}

const std::vector<Event>& Term::guards() const {
  assert(is(TermKind::Choice));
  return node_->guards;
}

std::vector<Branch> Term::branches() const {
  assert(is(TermKind::Choice));
  std::vector<Branch> out;
  out.reserve(node_->guards.size());
  for (std::size_t i = 0; i < node_->guards.size(); ++i) {
    out.push_back({node_->guards[i], node_->children[i]});
  }
  return out;
}

const Term& Term::left() const {
  assert(is(TermKind::Parallel));
  return node_->children[0];
}

const Term& Term::right() const {
  assert(is(TermKind::Parallel));
  return node_->children[1];
}

const Alphabet& Term::left_alphabet() const {
  assert(is(TermKind::Parallel));
  return node_->left_alphabet;
}

const Alphabet& Term::right_alphabet() const {
  assert(is(TermKind::Parallel));
  return node_->right_alphabet;
}

const std::string& Term::name() const { return node_->name; }

const Term& Term::body() const {
  assert(is(TermKind::Mu));
  return node_->children[0];
}

std::size_t Term::child_count() const { return node_->children.size(); }

const Term& Term::child(std::size_t i) const { return node_->children.at(i); }

Term Term::with_child(std::size_t i, Term replacement) const {
  auto n = std::make_shared<Node>(*node_);
  n->children.at(i) = std::move(replacement);
  return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  return a.same_node(b) || canonical_key(a) == canonical_key(b);
}

// ---------------------------------------------------------------------------

Term substitute(const Term& term, const std::string& var,
                const Term& replacement) {
  switch (term.kind()) {
    case TermKind::Var:
      return term.name() == var ? replacement : term;
    case TermKind::Mu: {
      if (term.name() == var) return term;
      auto body_free = free_variables(term.body());
      if (!body_free.contains(var)) return term;
      if (free_variables(replacement).contains(term.name())) {
        // Rename the binder so it cannot capture the replacement.
        std::set<std::string> taken = free_variables(replacement);
        taken.insert(body_free.begin(), body_free.end());
        taken.insert(var);
        std::string fresh = term.name();
        for (int i = 1; taken.contains(fresh); ++i) {
          fresh = term.name() + std::to_string(i);
        }
        Term body = substitute(term.body(), term.name(), Term::var(fresh));
        return Term::mu(fresh, substitute(body, var, replacement));
      }
      break;
    }
    default:
      break;
  }
  Term out = term;
  for (std::size_t i = 0; i < term.child_count(); ++i) {
    Term c = substitute(term.child(i), var, replacement);
    if (!c.same_node(term.child(i))) out = out.with_child(i, std::move(c));
  }
  return out;
}

Term unfold(const Term& mu) {
  if (!mu.is(TermKind::Mu)) throw TermError("unfold expects a mu term");
  return substitute(mu.body(), mu.name(), mu);
}

namespace {

void collect_names(const Term& t, std::set<std::string>& names) {
  if (t.is(TermKind::Mu) || t.is(TermKind::Var) || t.is(TermKind::Ref)) {
    names.insert(t.name());
  }
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    collect_names(t.child(i), names);
  }
}

class FreshNames {
 public:
  explicit FreshNames(std::set<std::string> taken) : taken_(std::move(taken)) {}

  std::string next() {
    static constexpr const char* kBase[] = {"X", "Y", "Z", "W"};
    for (;;) {
      std::string candidate = kBase[counter_ % 4];
      if (counter_ >= 4) candidate += std::to_string(counter_ / 4);
      ++counter_;
      if (taken_.insert(candidate).second) return candidate;
    }
  }

 private:
  std::set<std::string> taken_;
  std::size_t counter_ = 0;
};

Term desugar_with(const Term& t, FreshNames& fresh) {
  switch (t.kind()) {
    case TermKind::StopLit: {
      auto x = fresh.next();
      return Term::mu(x, Term::prefix(Event::nil(), Term::var(x)));
    }
    case TermKind::SkipLit: {
      auto x = fresh.next();
      return Term::mu(x, Term::prefix(Event::tick(), Term::var(x)));
    }
    default:
      break;
  }
  Term out = t;
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    Term c = desugar_with(t.child(i), fresh);
    if (!c.same_node(t.child(i))) out = out.with_child(i, std::move(c));
  }
  return out;
}

void collect_alphabet(const Term& t, Alphabet& out) {
  if (t.is(TermKind::Prefix)) out.insert(t.event());
  if (t.is(TermKind::Choice)) {
    for (const auto& g : t.guards()) out.insert(g);
  }
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    collect_alphabet(t.child(i), out);
  }
}

void write_key(const Term& t, std::vector<const std::string*>& env,
               std::string& out) {
  switch (t.kind()) {
    case TermKind::Prefix:
      out += "P(";
      out += t.event().label();
      out += ',';
      write_key(t.rest(), env, out);
      out += ')';
      return;
    case TermKind::Choice: {
      out += "C(";
      const auto& guards = t.guards();
      for (std::size_t i = 0; i < guards.size(); ++i) {
        if (i) out += ';';
        out += guards[i].label();
        out += ':';
        write_key(t.child(i), env, out);
      }
      out += ')';
      return;
    }
    case TermKind::Parallel:
      out += "Q(";
      out += to_string(t.left_alphabet());
      out += to_string(t.right_alphabet());
      write_key(t.left(), env, out);
      out += ',';
      write_key(t.right(), env, out);
      out += ')';
      return;
    case TermKind::Mu:
      out += "M(";
      env.push_back(&t.name());
      write_key(t.body(), env, out);
      env.pop_back();
      out += ')';
      return;
    case TermKind::Var:
      for (std::size_t i = env.size(); i-- > 0;) {
        if (*env[i] == t.name()) {
          out += '#';
          out += std::to_string(env.size() - 1 - i);
          return;
        }
      }
      out += '$';
      out += t.name();
      return;
    case TermKind::Ref:
      out += '@';
      out += t.name();
      return;
    case TermKind::StopLit:
      out += "STOP";
      return;
    case TermKind::SkipLit:
      out += "SKIP";
      return;
  }
}

void collect_free(const Term& t, std::vector<std::string>& bound,
                  std::set<std::string>& out) {
  if (t.is(TermKind::Var)) {
    if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) {
      out.insert(t.name());
    }
    return;
  }
  if (t.is(TermKind::Mu)) bound.push_back(t.name());
  for (std::size_t i = 0; i < t.child_count(); ++i) {
    collect_free(t.child(i), bound, out);
  }
  if (t.is(TermKind::Mu)) bound.pop_back();
}

// `guarded_upto`: binders at indices below it have a guard between them and
// the current position.
bool guarded_from(const Term& t, std::vector<const std::string*>& binders,
                  std::size_t guarded_upto) {
  switch (t.kind()) {
    case TermKind::Var:
      for (std::size_t i = binders.size(); i-- > 0;) {
        if (*binders[i] == t.name()) return i < guarded_upto;
      }
      return true;
    case TermKind::Prefix:
    case TermKind::Choice:
      for (std::size_t i = 0; i < t.child_count(); ++i) {
        if (!guarded_from(t.child(i), binders, binders.size())) return false;
      }
      return true;
    case TermKind::Mu: {
      binders.push_back(&t.name());
      bool ok = guarded_from(t.body(), binders, guarded_upto);
      binders.pop_back();
      return ok;
    }
    default:
      for (std::size_t i = 0; i < t.child_count(); ++i) {
        if (!guarded_from(t.child(i), binders, guarded_upto)) return false;
      }
      return true;
  }
}

}  // namespace

Term desugar(const Term& term) {
  std::set<std::string> taken;
  collect_names(term, taken);
  FreshNames fresh(std::move(taken));
  return desugar_with(term, fresh);
}

Alphabet syntactic_alphabet(const Term& term) {
  Alphabet out;
  collect_alphabet(term, out);
  return out;
}

std::string canonical_key(const Term& term) {
  std::vector<const std::string*> env;
  std::string out;
  write_key(term, env, out);
  return out;
}

std::set<std::string> free_variables(const Term& term) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(term, bound, out);
  return out;
}

bool is_closed(const Term& term) { return free_variables(term).empty(); }

bool is_guarded(const Term& term) {
  std::vector<const std::string*> binders;
  return guarded_from(term, binders, 0);
}

bool contains_surface_literals(const Term& term) {
  if (term.is(TermKind::StopLit) || term.is(TermKind::SkipLit)) return true;
  for (std::size_t i = 0; i < term.child_count(); ++i) {
    if (contains_surface_literals(term.child(i))) return true;
  }
  return false;
}

std::size_t operator_count(const Term& term) {
  std::size_t n = 0;
  switch (term.kind()) {
    case TermKind::Prefix:
    case TermKind::Choice:
    case TermKind::Parallel:
    case TermKind::Mu:
      n = 1;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < term.child_count(); ++i) {
    n += operator_count(term.child(i));
  }
  return n;
}

std::size_t nil_prefix_count(const Term& term) {
  std::size_t n =
      term.is(TermKind::Prefix) && term.event().is_nil() ? 1 : 0;
  for (std::size_t i = 0; i < term.child_count(); ++i) {
    n += nil_prefix_count(term.child(i));
  }
  return n;
}

void validate(const Term& term) {
  auto free = free_variables(term);
  if (!free.empty()) {
    throw TermError("unbound variable '" + *free.begin() + "'");
  }
  if (!is_guarded(term)) {
    throw TermError("unguarded recursion");
  }
}

}  // namespace nilcsp
