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

#include <gtest/gtest.h>

#include "nilcsp/error.hpp"
#include "nilcsp/generator.hpp"
#include "nilcsp/parser.hpp"
#include "nilcsp/term.hpp"

namespace nilcsp {
namespace {

Event coin = Event::named("coin");
Event choc = Event::named("choc");
Event toffee = Event::named("toffee");

Term stop_eq() {
  return Term::mu("X", Term::prefix(Event::nil(), Term::var("X")));
}

Term skip_eq() {
  return Term::mu("X", Term::prefix(Event::tick(), Term::var("X")));
}

TEST(Term, PrefixAccessors) {
  Term t = Term::prefix(coin, Term::stop());
  EXPECT_TRUE(t.is(TermKind::Prefix));
  EXPECT_EQ(t.event(), coin);
  EXPECT_TRUE(t.rest().is(TermKind::StopLit));
}

TEST(Term, ChoiceRejectsNilGuard) {
  EXPECT_THROW(Term::choice({{Event::nil(), Term::stop()}, {coin, Term::stop()}}),
               TermError);
}

TEST(Term, ChoiceRejectsDuplicateGuards) {
  EXPECT_THROW(Term::choice({{coin, Term::stop()}, {coin, Term::skip()}}),
               TermError);
}

TEST(Term, ChoiceNeedsTwoBranches) {
  EXPECT_THROW(Term::choice({{coin, Term::stop()}}), TermError);
}

TEST(Term, MuRejectsReservedBinder) {
  EXPECT_THROW(Term::mu("nil", Term::var("nil")), TermError);
}

TEST(Term, EqualityIgnoresBinderNames) {
  Term a = stop_eq();
  Term b = Term::mu("Y", Term::prefix(Event::nil(), Term::var("Y")));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, skip_eq());
}

TEST(Term, Substitute) {
  Term body = Term::prefix(Event::nil(), Term::var("X"));
  EXPECT_EQ(substitute(body, "X", Term::stop()),
            Term::prefix(Event::nil(), Term::stop()));
  Term closed = Term::prefix(coin, Term::stop());
  EXPECT_EQ(substitute(closed, "X", Term::skip()), closed);
  Term bound = Term::mu("X", Term::prefix(coin, Term::var("X")));
  EXPECT_EQ(substitute(bound, "X", Term::skip()), bound);
}

TEST(Term, SubstituteAvoidsCapture) {
  // mu Y . a -> X with X := Y must not bind the substituted Y.
  Term t = Term::mu("Y", Term::prefix(coin, Term::var("X")));
  Term r = substitute(t, "X", Term::var("Y"));
  EXPECT_EQ(free_variables(r), std::set<std::string>{"Y"});
}

TEST(Term, Unfold) {
  EXPECT_EQ(unfold(stop_eq()), Term::prefix(Event::nil(), stop_eq()));
  EXPECT_EQ(unfold(skip_eq()), Term::prefix(Event::tick(), skip_eq()));
  Term unused = Term::mu("X", Term::prefix(coin, Term::stop()));
  EXPECT_EQ(unfold(unused), Term::prefix(coin, Term::stop()));
  EXPECT_THROW(unfold(Term::stop()), TermError);
}

TEST(Term, Desugar) {
  EXPECT_EQ(desugar(Term::prefix(coin, Term::prefix(choc, Term::stop()))),
            Term::prefix(coin, Term::prefix(choc, stop_eq())));
  EXPECT_EQ(desugar(Term::skip()), skip_eq());
  Term par = Term::parallel(Term::prefix(coin, Term::stop()), Term::skip());
  Term d = desugar(par);
  ASSERT_TRUE(d.is(TermKind::Parallel));
  EXPECT_EQ(d.left(), Term::prefix(coin, stop_eq()));
  EXPECT_EQ(d.right(), skip_eq());
  EXPECT_FALSE(contains_surface_literals(d));
}

TEST(Term, DesugarPicksBinderNotUsedInTerm) {
  // A STOP under mu X must not be captured by X.
  Term t = Term::mu("X", Term::choice({{coin, Term::var("X")},
                                       {choc, Term::stop()}}));
  Term d = desugar(t);
  EXPECT_TRUE(is_closed(d));
  EXPECT_TRUE(is_guarded(d));
  EXPECT_EQ(print(d), "mu X . coin -> X | choc -> mu Y . nil -> Y");
}

TEST(Term, SyntacticAlphabet) {
  EXPECT_EQ(syntactic_alphabet(
                Term::prefix(coin, Term::prefix(choc, Term::stop()))),
            (Alphabet{coin, choc}));
  EXPECT_EQ(syntactic_alphabet(stop_eq()), Alphabet{});
  EXPECT_EQ(syntactic_alphabet(Term::choice(
                {{choc, Term::skip()}, {toffee, Term::skip()}})),
            (Alphabet{choc, toffee}));
}

TEST(Term, Guardedness) {
  EXPECT_TRUE(is_guarded(stop_eq()));
  EXPECT_FALSE(is_guarded(Term::mu("X", Term::var("X"))));
  EXPECT_FALSE(is_guarded(
      Term::mu("X", Term::parallel(Term::var("X"), Term::stop()))));
}

TEST(Term, Counts) {
  Term t = Term::prefix(coin, Term::prefix(Event::nil(), stop_eq()));
  EXPECT_EQ(nil_prefix_count(t), 2u);
  EXPECT_EQ(operator_count(t), 4u);
}

TEST(Term, WithChildRebuildsOneSlot) {
  Term t = Term::prefix(coin, Term::stop());
  Term u = t.with_child(0, Term::skip());
  EXPECT_EQ(u, Term::prefix(coin, Term::skip()));
  EXPECT_EQ(t, Term::prefix(coin, Term::stop()));
}

class TermProperties : public ::testing::Test {
 protected:
  std::vector<Term> surface(std::uint64_t seed) {
    TermGenerator gen(seed, 6, Alphabet{coin, choc});
    std::vector<Term> out;
    for (int i = 0; i < 1000; ++i) out.push_back(gen.next_surface());
    return out;
  }
};

TEST_F(TermProperties, DesugarIsIdempotent) {
  for (const auto& t : surface(3)) {
    Term d = desugar(t);
    EXPECT_EQ(desugar(d), d) << t;
    EXPECT_FALSE(contains_surface_literals(d));
  }
}

TEST_F(TermProperties, DesugarKeepsAlphabet) {
  for (const auto& t : surface(5)) {
    EXPECT_EQ(syntactic_alphabet(desugar(t)), syntactic_alphabet(t)) << t;
  }
}

TEST_F(TermProperties, SubstituteVarForItselfIsIdentity) {
  for (const auto& t : surface(9)) {
    EXPECT_EQ(substitute(t, "X", Term::var("X")), t) << t;
  }
}

TEST_F(TermProperties, UnfoldPreservesClosedness) {
  for (const auto& t : surface(21)) {
    Term d = desugar(t);
    if (!d.is(TermKind::Mu)) continue;
    EXPECT_TRUE(is_closed(unfold(d))) << t;
  }
}

}  // namespace
}  // namespace nilcsp
