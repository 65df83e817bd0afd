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

#include "nilcsp/parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "nilcsp/error.hpp"

namespace nilcsp {

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  Name,
  Arrow,
  Bar,
  Par,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Equals,
  Dot,
  Newline,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Name:
      return "'" + t.text + "'";
    case Tok::Newline:
      return "end of line";
    case Tok::End:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view input) : in_(input) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blanks();
      int line = line_;
      int col = column_;
      if (pos_ >= in_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      char c = in_[pos_];
      auto emit = [&](Tok kind, std::string text, std::size_t bytes) {
        advance(bytes);
        out.push_back({kind, std::move(text), line, col});
      };
      if (c == '\n') {
        out.push_back({Tok::Newline, "\\n", line, col});
        ++pos_;
        ++line_;
        column_ = 1;
        continue;
      }
      if (is_ident_start(c)) {
        std::size_t end = pos_;
        while (end < in_.size() && is_ident_char(in_[end])) ++end;
        emit(Tok::Name, std::string(in_.substr(pos_, end - pos_)), end - pos_);
        continue;
      }
      if (starts_with("->")) { emit(Tok::Arrow, "->", 2); continue; }
      if (starts_with("→")) { emit(Tok::Arrow, "->", 3); continue; }
      if (starts_with("||")) { emit(Tok::Par, "||", 2); continue; }
      if (starts_with("∥") || starts_with("‖")) {
        emit(Tok::Par, "||", 3);
        continue;
      }
      if (starts_with("μ")) { emit(Tok::Name, "mu", 2); continue; }
      if (starts_with("✓")) { emit(Tok::Name, "tick", 3); continue; }
      switch (c) {
        case '|': emit(Tok::Bar, "|", 1); continue;
        case '(': emit(Tok::LParen, "(", 1); continue;
        case ')': emit(Tok::RParen, ")", 1); continue;
        case '{': emit(Tok::LBrace, "{", 1); continue;
        case '}': emit(Tok::RBrace, "}", 1); continue;
        case ',': emit(Tok::Comma, ",", 1); continue;
        case '=': emit(Tok::Equals, "=", 1); continue;
        case '.': emit(Tok::Dot, ".", 1); continue;
        default:
          break;
      }
      std::size_t len = utf8_length(static_cast<unsigned char>(c));
      throw ParseError(line, col,
                       "unexpected character '" +
                           std::string(in_.substr(pos_, len)) + "'");
    }
  }

 private:
  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  }
  static bool is_ident_char(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9') || c == '_';
  }
  static std::size_t utf8_length(unsigned char c) {
    if (c >= 0xF0) return 4;
    if (c >= 0xE0) return 3;
    if (c >= 0xC0) return 2;
    return 1;
  }

  bool starts_with(std::string_view s) const {
    return in_.substr(pos_, s.size()) == s;
  }

  // Columns count code points, not bytes.
  void advance(std::size_t bytes) {
    for (std::size_t i = 0; i < bytes && pos_ < in_.size(); ++i, ++pos_) {
      if ((static_cast<unsigned char>(in_[pos_]) & 0xC0) != 0x80) ++column_;
    }
  }

  void skip_blanks() {
    while (pos_ < in_.size()) {
      char c = in_[pos_];
      if (c == ' ' || c == '\t' || c == '\r') {
        advance(1);
      } else if (c == '#') {
        while (pos_ < in_.size() && in_[pos_] != '\n') advance(1);
      } else {
        return;
      }
    }
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// ---------------------------------------------------------------------------
// Unresolved syntax tree

struct Syntax {
  enum Kind { Prefix, Choice, Par, Mu, Name, Stop, Skip } kind;
  std::string text;  // event label, name or binder
  int line = 0;
  int column = 0;
  std::vector<Syntax> kids;
};

void collect_syntax_events(const Syntax& s, Alphabet& out) {
  if (s.kind == Syntax::Prefix && s.text != "nil" && s.text != "tick") {
    out.insert(Event::named(s.text));
  }
  for (const auto& k : s.kids) collect_syntax_events(k, out);
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  struct RawDef {
    Token name;
    std::optional<std::vector<Token>> alphabet;
    Syntax body;
  };

  struct RawFile {
    std::vector<RawDef> defs;
    std::optional<Syntax> main;
  };

  RawFile file() {
    RawFile out;
    for (;;) {
      skip_newlines();
      if (peek().kind == Tok::End) return out;
      if (starts_definition()) {
        out.defs.push_back(definition());
        continue;
      }
      out.main = expression();
      skip_newlines();
      if (peek().kind != Tok::End) {
        fail("expected end of input after the main expression",
             {"end of input"});
      }
      return out;
    }
  }

  Syntax lone_expression() {
    skip_newlines();
    Syntax s = expression();
    skip_newlines();
    if (peek().kind != Tok::End) fail("unexpected trailing input", {"end of input"});
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) {
    std::size_t i = pos_;
    for (;;) {
      while (depth_ > 0 && toks_[i].kind == Tok::Newline) ++i;
      if (ahead == 0 || toks_[i].kind == Tok::End) return toks_[i];
      --ahead;
      ++i;
    }
  }

  Token take() {
    while (depth_ > 0 && toks_[pos_].kind == Tok::Newline) ++pos_;
    Token t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }

  void skip_newlines() {
    while (toks_[pos_].kind == Tok::Newline) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected) {
    const Token& t = peek();
    throw ParseError(t.line, t.column, message + ", found " + describe(t),
                     std::move(expected));
  }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what, {what});
    return take();
  }

  static bool is_keyword(const Token& t) {
    return t.kind == Tok::Name && is_reserved_word(t.text);
  }

  bool starts_definition() {
    const Token& first = peek();
    if (first.kind != Tok::Name || is_keyword(first)) return false;
    const Token& second = peek(1);
    return second.kind == Tok::Equals ||
           (second.kind == Tok::Name && second.text == "alpha");
  }

  RawDef definition() {
    RawDef def{take(), std::nullopt, {}};
    if (peek().kind == Tok::Name && peek().text == "alpha") {
      take();
      expect(Tok::LBrace, "'{'");
      std::vector<Token> names;
      names.push_back(event_name());
      while (peek().kind == Tok::Comma) {
        take();
        names.push_back(event_name());
      }
      expect(Tok::RBrace, "'}'");
      def.alphabet = std::move(names);
    }
    expect(Tok::Equals, "'='");
    skip_newlines();
    def.body = expression();
    if (peek().kind != Tok::Newline && peek().kind != Tok::End) {
      fail("expected end of line after definition",
           {"end of line", "'|'", "'||'", "'->'"});
    }
    return def;
  }

  Token event_name() {
    const Token& t = peek();
    if (t.kind != Tok::Name) fail("expected event name", {"event name"});
    if (is_keyword(t)) {
      fail("reserved word cannot name an event", {"event name"});
    }
    return take();
  }

  Syntax expression() { return par(); }

  Syntax par() {
    Syntax left = choice();
    while (peek().kind == Tok::Par) {
      Token op = take();
      skip_newlines();
      Syntax right = choice();
      Syntax node{Syntax::Par, "||", op.line, op.column, {}};
      node.kids.push_back(std::move(left));
      node.kids.push_back(std::move(right));
      left = std::move(node);
    }
    return left;
  }

  Syntax choice() {
    Syntax first = prefix();
    if (peek().kind != Tok::Bar) return first;
    Syntax node{Syntax::Choice, "|", first.line, first.column, {}};
    node.kids.push_back(std::move(first));
    while (peek().kind == Tok::Bar) {
      take();
      skip_newlines();
      node.kids.push_back(prefix());
    }
    return node;
  }

  bool at_event() {
    const Token& t = peek();
    if (t.kind != Tok::Name) return false;
    if (t.text == "nil" || t.text == "tick") return true;
    return !is_keyword(t) && peek(1).kind == Tok::Arrow;
  }

  Syntax prefix() {
    if (!at_event()) return atom();
    Token ev = take();
    expect(Tok::Arrow, "'->'");
    skip_newlines();
    Syntax node{Syntax::Prefix, ev.text, ev.line, ev.column, {}};
    node.kids.push_back(prefix());
    return node;
  }

  Syntax atom() {
    static const std::vector<std::string> kExpected = {
        "event", "name", "STOP", "SKIP", "mu", "'('"};
    const Token& t = peek();
    switch (t.kind) {
      case Tok::LParen: {
        take();
        ++depth_;
        Syntax inner = expression();
        expect(Tok::RParen, "')'");
        --depth_;
        return inner;
      }
      case Tok::Name:
        break;
      default:
        fail("expected event or process", kExpected);
    }
    if (t.text == "STOP" || t.text == "SKIP") {
      Token k = take();
      return {k.text == "STOP" ? Syntax::Stop : Syntax::Skip, k.text, k.line,
              k.column, {}};
    }
    if (t.text == "mu") {
      Token m = take();
      Token binder = peek();
      if (binder.kind != Tok::Name || is_keyword(binder)) {
        fail("expected recursion variable", {"name"});
      }
      take();
      expect(Tok::Dot, "'.'");
      skip_newlines();
      Syntax node{Syntax::Mu, binder.text, m.line, m.column, {}};
      node.kids.push_back(expression());
      return node;
    }
    if (is_keyword(t)) fail("reserved word cannot name a process", kExpected);
    Token n = take();
    return {Syntax::Name, n.text, n.line, n.column, {}};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// ---------------------------------------------------------------------------
// Name resolution

class Resolver {
 public:
  explicit Resolver(const std::map<std::string, Alphabet>& alphabets)
      : alphabets_(alphabets) {}

  // `declared`: events must belong to this alphabet.
  Term resolve(const Syntax& s, const Alphabet* declared) {
    declared_ = declared;
    scope_.clear();
    return go(s);
  }

 private:
  Event event_at(const Syntax& s) {
    if (s.text == "nil") return Event::nil();
    if (s.text == "tick") return Event::tick();
    Event e = Event::named(s.text);
    if (declared_ && !declared_->contains(e)) {
      throw ResolveError(s.line, s.column,
                         "event '" + s.text + "' is not in the alphabet " +
                             to_string(*declared_));
    }
    return e;
  }

  Alphabet alphabet_of(const Term& t) {
    Alphabet out = syntactic_alphabet(t);
    add_ref_alphabets(t, out);
    return out;
  }

  void add_ref_alphabets(const Term& t, Alphabet& out) {
    if (t.is(TermKind::Ref)) {
      out.insert_all(alphabets_.at(t.name()));
      return;
    }
    for (std::size_t i = 0; i < t.child_count(); ++i) {
      add_ref_alphabets(t.child(i), out);
    }
  }

  Term go(const Syntax& s) {
    switch (s.kind) {
      case Syntax::Prefix:
        return Term::prefix(event_at(s), go(s.kids[0]));
      case Syntax::Choice: {
        std::vector<Branch> branches;
        std::set<std::string> seen;
        for (const auto& alt : s.kids) {
          if (alt.kind != Syntax::Prefix) {
            throw ResolveError(alt.line, alt.column,
                               "choice alternatives must be guarded by an "
                               "event (e -> P)");
          }
          if (alt.text == "nil") {
            throw ResolveError(alt.line, alt.column,
                               "nil cannot guard a choice branch");
          }
          if (!seen.insert(alt.text).second) {
            throw ResolveError(alt.line, alt.column,
                               "duplicate choice guard '" + alt.text + "'");
          }
          branches.push_back({event_at(alt), go(alt.kids[0])});
        }
        return Term::choice(std::move(branches));
      }
      case Syntax::Par: {
        Term l = go(s.kids[0]);
        Term r = go(s.kids[1]);
        Alphabet la = alphabet_of(l);
        Alphabet ra = alphabet_of(r);
        return Term::parallel(std::move(l), std::move(r), std::move(la),
                              std::move(ra));
      }
      case Syntax::Mu: {
        if (alphabets_.contains(s.text)) {
          throw ResolveError(s.line, s.column,
                             "recursion variable '" + s.text +
                                 "' shadows a definition");
        }
        scope_.push_back(s.text);
        Term body = go(s.kids[0]);
        scope_.pop_back();
        return Term::mu(s.text, std::move(body));
      }
      case Syntax::Name:
        if (alphabets_.contains(s.text)) return Term::ref(s.text);
        if (std::find(scope_.begin(), scope_.end(), s.text) != scope_.end()) {
          return Term::var(s.text);
        }
        throw ResolveError(s.line, s.column,
                           "unbound name '" + s.text + "'");
      case Syntax::Stop:
        return Term::stop();
      case Syntax::Skip:
        return Term::skip();
    }
    throw ResolveError(s.line, s.column, "unknown syntax");
  }

  const std::map<std::string, Alphabet>& alphabets_;
  const Alphabet* declared_ = nullptr;
  std::vector<std::string> scope_;
};

void require_guarded(const Term& t, const Syntax& at, const std::string& what) {
  if (!is_guarded(t)) {
    throw ResolveError(at.line, at.column, "unguarded recursion in " + what);
  }
}

}  // namespace

SourceFile parse(std::string_view input) {
  Parser parser(Lexer(input).run());
  auto raw = parser.file();

  std::map<std::string, Alphabet> alphabets;
  std::map<std::string, bool> declared;
  for (const auto& d : raw.defs) {
    if (alphabets.contains(d.name.text)) {
      throw ResolveError(d.name.line, d.name.column,
                         "duplicate definition '" + d.name.text + "'");
    }
    Alphabet a;
    if (d.alphabet) {
      for (const auto& e : *d.alphabet) a.insert(Event::named(e.text));
    } else {
      collect_syntax_events(d.body, a);
    }
    alphabets.emplace(d.name.text, std::move(a));
    declared[d.name.text] = d.alphabet.has_value();
  }

  SourceFile out;
  Resolver resolver(alphabets);
  for (const auto& d : raw.defs) {
    const Alphabet& a = alphabets.at(d.name.text);
    Term body = resolver.resolve(d.body, declared[d.name.text] ? &a : nullptr);
    require_guarded(body, d.body, "'" + d.name.text + "'");
    out.definitions.add({d.name.text, a, declared[d.name.text], body});
  }
  try {
    out.definitions.validate();
  } catch (const SemanticError& e) {
    throw ResolveError(1, 1, e.what());
  }
  if (raw.main) {
    Term main = resolver.resolve(*raw.main, nullptr);
    require_guarded(main, *raw.main, "the main expression");
    out.main = std::move(main);
  }
  return out;
}

Term parse_expression(std::string_view input, const Definitions& defs) {
  Parser parser(Lexer(input).run());
  Syntax s = parser.lone_expression();
  std::map<std::string, Alphabet> alphabets;
  for (const auto& d : defs.entries()) alphabets.emplace(d.name, d.alphabet);
  Resolver resolver(alphabets);
  Term t = resolver.resolve(s, nullptr);
  require_guarded(t, s, "expression");
  return t;
}

}  // namespace nilcsp
