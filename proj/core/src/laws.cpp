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

#include "nilcsp/laws.hpp"

#include <json.hpp>
#include <sstream>

#include "nilcsp/generator.hpp"
#include "nilcsp/parser.hpp"
#include "nilcsp/semantics.hpp"

namespace nilcsp {

std::string_view to_string(LawId law) {
  static constexpr std::array<std::string_view, 11> kNames = {
      "L1", "L2", "L3", "L4", "L5", "L6", "T1", "T2", "T3", "T4", "T5"};
  return kNames[static_cast<std::size_t>(law)];
}

std::optional<LawId> law_from_string(std::string_view text) {
  for (auto law : kAllLaws) {
    if (to_string(law) == text) return law;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

bool is_nil_prefix(const Term& t) {
  return t.is(TermKind::Prefix) && t.event().is_nil();
}

std::optional<Term> apply_law(LawId law, const Term& t) {
  switch (law) {
    case LawId::L3:
      if (is_nil_prefix(t)) return t.rest();
      break;
    case LawId::L2:
      if (t.is(TermKind::Prefix) && is_nil_prefix(t.rest())) {
        return Term::prefix(t.event(), t.rest().rest());
      }
      break;
    case LawId::L5:
      if (t.is(TermKind::Parallel) && is_nil_prefix(t.left()) &&
          is_nil_prefix(t.right())) {
        return Term::parallel(t.left().rest(), t.right().rest(),
                              t.left_alphabet(), t.right_alphabet());
      }
      break;
    case LawId::L6:
      if (t.is(TermKind::Parallel) && is_nil_prefix(t.left()) &&
          t.right().is(TermKind::Prefix) && !t.right().event().is_nil()) {
        return Term::parallel(t.left().rest(), t.right(), t.left_alphabet(),
                              t.right_alphabet());
      }
      break;
    default:
      break;
  }
  return std::nullopt;
}

Term replace_at(const Term& root, const std::vector<std::size_t>& path,
                std::size_t index, const Term& replacement) {
  if (index == path.size()) return replacement;
  std::size_t i = path[index];
  return root.with_child(i, replace_at(root.child(i), path, index + 1,
                                       replacement));
}

constexpr std::array<LawId, 4> kRewriteOrder = {LawId::L3, LawId::L2,
                                                LawId::L5, LawId::L6};

std::optional<std::pair<Term, RewriteStep>> search(
    const Term& root, const Term& node, std::vector<std::size_t>& path) {
  for (auto law : kRewriteOrder) {
    auto replacement = apply_law(law, node);
    if (!replacement) continue;
    Term after = replace_at(root, path, 0, *replacement);
    if (!is_guarded(after)) continue;
    return std::make_pair(after, RewriteStep{law, path, root, after});
  }
  for (std::size_t i = 0; i < node.child_count(); ++i) {
    path.push_back(i);
    auto found = search(root, node.child(i), path);
    path.pop_back();
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Term, RewriteStep>> rewrite_once(const Term& term) {
  std::vector<std::size_t> path;
  return search(term, term, path);
}

Normalization normalize(const Term& term) {
  Normalization out{term, {}};
  while (auto next = rewrite_once(out.term)) {
    out.term = std::move(next->first);
    out.steps.push_back(std::move(next->second));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Law harness

const Alphabet& law_alphabet() {
  static const Alphabet kAlphabet{Event::named("a"), Event::named("b")};
  return kAlphabet;
}

namespace {

Trace nils(std::size_t n) {
  return Trace(std::vector<Event>(n, Event::nil()));
}

class LawChecker {
 public:
  LawChecker(LawId law, const LawCheckOptions& options)
      : options_(options),
        gen_(options.seed, options.size_bound, law_alphabet()) {
    report_.law = law;
  }

  LawReport run() {
    for (std::size_t i = 0; i < options_.samples; ++i) {
      check_instance();
      ++report_.instances_checked;
    }
    report_.passed = report_.counterexamples.empty();
    if (report_.law == LawId::L4) {
      report_.note =
          "checked for P with an observable first event; nil -> STOP is "
          "trace-equivalent to STOP, so the unrestricted law fails there";
    }
    return std::move(report_);
  }

 private:
  void equal_terms(const Term& lhs, const Term& rhs) {
    auto r = trace_equiv(lhs, rhs, no_defs_, options_.depth);
    if (!r.equivalent) {
      report_.counterexamples.push_back(
          {print(lhs) + " = " + print(rhs), r.witness});
    }
  }

  void equal_traces(const Trace& raw, const Trace& expected) {
    Trace erased = erase_nil(raw);
    if (erased != expected) {
      report_.counterexamples.push_back(
          {"erase(" + format_trace(raw) + ") = " + format_trace(expected),
           erased});
    }
  }

  Term observable_term() {
    for (;;) {
      Term p = gen_.next();
      if (!observable_step(p, no_defs_).empty()) return p;
    }
  }

  void check_instance() {
    const Event nil = Event::nil();
    switch (report_.law) {
      case LawId::L1: {
        Term p = gen_.next();
        Event x = gen_.next_named();
        equal_terms(Term::prefix(nil, Term::prefix(x, p)), Term::prefix(x, p));
        return;
      }
      case LawId::L2: {
        Term p = gen_.next();
        Event x = gen_.next_named();
        equal_terms(Term::prefix(x, Term::prefix(nil, p)), Term::prefix(x, p));
        return;
      }
      case LawId::L3: {
        Term p = gen_.next();
        equal_terms(Term::prefix(nil, p), p);
        return;
      }
      case LawId::L4: {
        Term p = observable_term();
        Term lhs = Term::prefix(nil, p);
        Term stop = desugar(Term::stop());
        if (trace_equiv(lhs, stop, no_defs_, options_.depth).equivalent) {
          report_.counterexamples.push_back(
              {print(lhs) + " != " + print(stop), std::nullopt});
        }
        return;
      }
      case LawId::L5: {
        Term p = gen_.next_tick_free();
        Term q = gen_.next_tick_free();
        equal_terms(
            Term::parallel(Term::prefix(nil, p), Term::prefix(nil, q)),
            Term::parallel(p, q));
        return;
      }
      case LawId::L6: {
        Term p = gen_.next_tick_free();
        Term q = gen_.next_tick_free();
        Event x = gen_.next_named();
        Term xq = Term::prefix(x, q);
        equal_terms(Term::parallel(Term::prefix(nil, p), xq),
                    Term::parallel(p, xq));
        return;
      }
      default:
        check_trace_instance();
        return;
    }
  }

  // Trace laws are equations between traces, so each is checked both as
  // written and inside a generated context.
  void check_trace_instance() {
    const std::size_t n = options_.size_bound;
    Trace u = gen_.next_raw_trace(n);
    Trace v = gen_.next_raw_trace(n);
    Trace x{gen_.next_named()};
    Trace y{gen_.below(4) == 0 ? Event::tick() : gen_.next_named()};
    const Trace nil{Event::nil()};
    switch (report_.law) {
      case LawId::T1:
        equal_traces(nil, Trace{});
        equal_traces(concat(concat(u, nil), v), erase_nil(concat(u, v)));
        return;
      case LawId::T2: {
        Trace run = nils(gen_.below(n + 1));
        equal_traces(run, Trace{});
        equal_traces(concat(concat(u, run), v), erase_nil(concat(u, v)));
        return;
      }
      case LawId::T3:
        equal_traces(concat(x, nil), x);
        equal_traces(concat(u, nil), erase_nil(u));
        return;
      case LawId::T4:
        equal_traces(concat(nil, x), x);
        equal_traces(concat(nil, u), erase_nil(u));
        return;
      case LawId::T5:
        equal_traces(concat(concat(x, nil), y), concat(x, y));
        equal_traces(concat(concat(u, nil), v),
                     concat(erase_nil(u), erase_nil(v)));
        return;
      default:
        return;
    }
  }

  LawCheckOptions options_;
  TermGenerator gen_;
  Definitions no_defs_;
  LawReport report_;
};

}  // namespace

LawReport check_law(LawId law, const LawCheckOptions& options) {
  return LawChecker(law, options).run();
}

std::string render_text(const std::vector<LawReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << to_string(r.law);
    if (r.passed) {
      os << " passed " << r.instances_checked << " instances";
    } else {
      os << " FAILED " << r.counterexamples.size() << "/"
         << r.instances_checked << " instances";
    }
    if (!r.note.empty()) os << " (" << r.note << ")";
    os << '\n';
    for (const auto& c : r.counterexamples) {
      os << "  " << c.instance;
      if (c.witness) os << "  witness " << format_trace(*c.witness);
      os << '\n';
    }
  }
  return os.str();
}

std::string render_json(const std::vector<LawReport>& reports) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["law"] = std::string(to_string(r.law));
    j["instances"] = r.instances_checked;
    j["passed"] = r.passed;
    j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& c : r.counterexamples) {
      nlohmann::ordered_json cj;
      cj["term"] = c.instance;
      cj["witness"] = c.witness ? nlohmann::ordered_json(format_trace(*c.witness))
                                : nlohmann::ordered_json(nullptr);
      j["counterexamples"].push_back(std::move(cj));
    }
    if (!r.note.empty()) j["note"] = r.note;
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

}  // namespace nilcsp
