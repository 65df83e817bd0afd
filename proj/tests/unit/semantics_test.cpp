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
#include "nilcsp/semantics.hpp"
#include "test_util.hpp"

namespace nilcsp {
namespace {

using testing::ev;
using testing::term;
using testing::words_of;

std::vector<std::pair<std::string, std::string>> edges(
    const TransitionSet& ts) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& t : ts) out.emplace_back(t.label.label(), print(t.successor));
  return out;
}

using Edges = std::vector<std::pair<std::string, std::string>>;

const char* kVms = "VMS = coin -> choc -> coin -> choc -> STOP\n";

TEST(Step, Prefix) {
  EXPECT_EQ(edges(step(term("coin -> choc -> STOP"), {})),
            (Edges{{"coin", "choc -> mu X . nil -> X"}}));
}

TEST(Step, StopLoopsOnNil) {
  Term s = term("mu X . nil -> X");
  TransitionSet ts = step(s, {});
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].label, Event::nil());
  EXPECT_EQ(ts[0].successor, s);
}

TEST(Step, Choice) {
  TransitionSet ts = step(term("choc -> SKIP | toffee -> SKIP"), {});
  ASSERT_EQ(labels_of(ts), (std::vector<Event>{ev("choc"), ev("toffee")}));
  EXPECT_EQ(ts[0].successor, term("SKIP"));
  EXPECT_EQ(ts[1].successor, term("SKIP"));
}

TEST(Step, NilInterleavesInParallel) {
  Term p = term("a -> STOP");
  Term q = term("b -> STOP");
  Term t = Term::parallel(Term::prefix(Event::nil(), p),
                          Term::prefix(Event::nil(), q));
  TransitionSet ts = step(t, {});
  ASSERT_EQ(ts.size(), 2u);
  std::vector<Term> succ{ts[0].successor, ts[1].successor};
  Term a = Term::parallel(p, Term::prefix(Event::nil(), q));
  Term b = Term::parallel(Term::prefix(Event::nil(), p), q);
  EXPECT_EQ(ts[0].label, Event::nil());
  EXPECT_EQ(ts[1].label, Event::nil());
  EXPECT_TRUE((succ[0] == a && succ[1] == b) || (succ[0] == b && succ[1] == a));
}

TEST(Step, ParallelSynchronizesSharedEvents) {
  Term t = term("a -> b -> STOP || b -> STOP");
  EXPECT_EQ(labels_of(step(t, {})), std::vector<Event>{ev("a")});
  Term after = step(t, {})[0].successor;
  EXPECT_EQ(labels_of(step(after, {})), std::vector<Event>{ev("b")});
}

TEST(Step, TickUnderParallelIsRejected) {
  Term t = Term::parallel(term("a -> STOP"), term("SKIP"), Alphabet{ev("a")},
                          Alphabet{});
  EXPECT_THROW(observable_traces(t, {}, 3), SemanticError);
}

TEST(SilentClosure, RunawayRecursionThroughParallelIsBounded) {
  Term t = Term::mu("X", Term::prefix(Event::nil(),
                                      Term::parallel(Term::var("X"),
                                                     term("b -> STOP"),
                                                     Alphabet{}, Alphabet{ev("b")})));
  EXPECT_THROW(silent_closure(t, {}), SemanticError);
}

TEST(Step, RefUnfoldsWithoutLabel) {
  SourceFile f = parse(kVms);
  Definitions defs = f.definitions.desugared();
  EXPECT_EQ(labels_of(step(Term::ref("VMS"), defs)),
            std::vector<Event>{ev("coin")});
}

TEST(Step, IsDeterministic) {
  TermGenerator gen(5, 6, Alphabet{ev("a"), ev("b")});
  for (int i = 0; i < 300; ++i) {
    Term t = gen.next();
    TransitionSet x = step(t, {});
    TransitionSet y = step(t, {});
    ASSERT_EQ(x.size(), y.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      EXPECT_EQ(x[k].label, y[k].label);
      EXPECT_EQ(x[k].successor, y[k].successor);
    }
  }
}

TEST(SilentClosure, StopIsSingleton) {
  Term s = term("mu X . nil -> X");
  auto c = silent_closure(s, {});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], s);
}

TEST(SilentClosure, FollowsNilPrefix) {
  Term t = term("nil -> coin -> STOP");
  auto c = silent_closure(t, {});
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], t);
  EXPECT_EQ(c[1], term("coin -> STOP"));
  EXPECT_EQ(silent_closure(term("coin -> STOP"), {}).size(), 1u);
}

TEST(ObservableStep, Examples) {
  EXPECT_EQ(edges(observable_step(term("nil -> coin -> STOP"), {})),
            (Edges{{"coin", "mu X . nil -> X"}}));
  EXPECT_TRUE(observable_step(term("mu X . nil -> X"), {}).empty());
  Term skip = term("mu X . tick -> X");
  auto ts = observable_step(skip, {});
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].label, Event::tick());
  EXPECT_EQ(ts[0].successor, skip);
}

TEST(ObservableTraces, Vms) {
  SourceFile f = parse(kVms);
  Definitions defs = f.definitions.desugared();
  TraceSet ts = observable_traces(Term::ref("VMS"), defs, 8);
  EXPECT_FALSE(ts.truncated);
  std::vector<std::string> got;
  for (const auto& t : ts.traces) got.push_back(format_trace(t));
  EXPECT_EQ(got, (std::vector<std::string>{"<>", "<coin>", "<coin,choc>",
                                           "<coin,choc,coin>",
                                           "<coin,choc,coin,choc>"}));
}

TEST(ObservableTraces, Stop) {
  TraceSet ts = observable_traces(term("mu X . nil -> X"), {}, 8);
  EXPECT_EQ(ts.traces, std::set<Trace>{Trace{}});
  EXPECT_FALSE(ts.truncated);
}

TEST(ObservableTraces, SkipRepeatsTick) {
  // Unrolling SKIP = tick -> SKIP twice.
  TraceSet ts = observable_traces(term("mu X . tick -> X"), {}, 2);
  EXPECT_EQ(ts.traces,
            (std::set<Trace>{Trace{}, Trace{Event::tick()},
                             Trace{Event::tick(), Event::tick()}}));
  EXPECT_TRUE(ts.truncated);
}

TEST(ObservableTraces, ZeroDepth) {
  TraceSet ts = observable_traces(term("coin -> STOP"), {}, 0);
  EXPECT_EQ(ts.traces, std::set<Trace>{Trace{}});
  EXPECT_TRUE(ts.truncated);
}

TEST(ObservableTraces, Vmone) {
  SourceFile f = parse("VMONE = coin -> (choc -> SKIP | toffee -> SKIP)\n");
  Definitions defs = f.definitions.desugared();
  TraceSet ts = observable_traces(Term::ref("VMONE"), defs, 4);
  std::set<Trace> want;
  for (const char* s :
       {"<>", "<coin>", "<coin,choc>", "<coin,toffee>", "<coin,choc,tick>",
        "<coin,toffee,tick>", "<coin,choc,tick,tick>",
        "<coin,toffee,tick,tick>"}) {
    want.insert(parse_trace(s));
  }
  EXPECT_EQ(ts.traces, want);
}

TEST(ObservableTraces, ParallelRestrictsToSharedOrder) {
  TraceSet ts = observable_traces(term("a -> c -> STOP || b -> c -> STOP"),
                                  {}, 4);
  std::set<Trace> want;
  for (const char* s : {"<>", "<a>", "<b>", "<a,b>", "<b,a>", "<a,b,c>",
                        "<b,a,c>"}) {
    want.insert(parse_trace(s));
  }
  EXPECT_EQ(ts.traces, want);
}

TEST(CheckTraceSet, RejectsMalformedSets) {
  TraceSet missing_empty;
  missing_empty.traces = {parse_trace("<a>")};
  EXPECT_THROW(check_trace_set(missing_empty), std::logic_error);
  TraceSet not_closed;
  not_closed.traces = {Trace{}, parse_trace("<a,b>")};
  EXPECT_THROW(check_trace_set(not_closed), std::logic_error);
  TraceSet with_nil;
  with_nil.traces = {Trace{}, parse_trace("<nil>")};
  EXPECT_THROW(check_trace_set(with_nil), std::logic_error);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(term("mu X . nil -> X"), {}), Status::Quiescent);
  EXPECT_EQ(classify(term("nil -> coin -> STOP"), {}), Status::Live);
  EXPECT_EQ(classify(term("mu X . tick -> X"), {}), Status::Terminating);
  EXPECT_EQ(classify(term("coin -> STOP | tick -> STOP"), {}), Status::Live);
  EXPECT_EQ(to_string(Status::Quiescent), "quiescent");
}

TEST(TraceEquiv, Examples) {
  auto r = trace_equiv(term("mu X . nil -> X"), term("nil -> coin -> STOP"),
                       {}, 6);
  EXPECT_FALSE(r.equivalent);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(format_trace(*r.witness), "<coin>");
  Term t = term("coin -> (choc -> STOP | toffee -> SKIP)");
  EXPECT_TRUE(trace_equiv(t, t, {}, 6).equivalent);
  EXPECT_FALSE(trace_equiv(t, t, {}, 6).witness);
}

TEST(TraceEquiv, WitnessIsShortestThenSmallest) {
  auto r = trace_equiv(term("a -> b -> STOP | c -> STOP"),
                       term("a -> STOP | b -> STOP"), {}, 6);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(format_trace(*r.witness), "<b>");
}

// The operational semantics must agree with the denotational oracle.
class AgainstOracle : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(AgainstOracle, GeneratedTerms) {
  TermGenerator gen(GetParam(), 6, Alphabet{ev("a"), ev("b")});
  for (int i = 0; i < 250; ++i) {
    Term t = gen.next();
    for (std::size_t depth : {0u, 3u, 6u}) {
      EXPECT_EQ(words_of(observable_traces(t, {}, depth)),
                oracle::traces(t, {}, depth))
          << print(t) << " at depth " << depth;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, AgainstOracle,
                         ::testing::Values(1u, 2u, 3u, 42u));

TEST(AgainstOracleDefs, RecursiveDefinitions) {
  SourceFile f = parse(
      "CLOCK = tik -> tock -> CLOCK\n"
      "LOOP = nil -> a -> LOOP\n"
      "PAIR alpha {a, b, tock} = LOOP || b -> tock -> STOP\n"
      "VM = coin -> (choc -> VM | toffee -> nil -> VM)\n");
  Definitions defs = f.definitions.desugared();
  for (const char* name : {"CLOCK", "LOOP", "PAIR", "VM"}) {
    EXPECT_EQ(words_of(observable_traces(Term::ref(name), defs, 6)),
              oracle::traces(Term::ref(name), defs, 6))
        << name;
  }
}

class SemanticsProperties : public ::testing::Test {
 protected:
  TermGenerator gen{77, 6, Alphabet{ev("a"), ev("b")}};
};

TEST_F(SemanticsProperties, MonotoneInDepth) {
  for (int i = 0; i < 300; ++i) {
    Term t = gen.next();
    auto lo = observable_traces(t, {}, 4).traces;
    auto hi = observable_traces(t, {}, 5).traces;
    EXPECT_TRUE(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()))
        << print(t);
  }
}

TEST_F(SemanticsProperties, NilTransparentInParallel) {
  for (int i = 0; i < 300; ++i) {
    Term p = gen.next_tick_free();
    Term q = gen.next_tick_free();
    Term x = Term::prefix(gen.next_named(), q);
    Term nil = Term::prefix(Event::nil(), p);
    EXPECT_TRUE(trace_equiv(Term::parallel(nil, Term::prefix(Event::nil(), q)),
                            Term::parallel(p, q), {}, 6)
                    .equivalent)
        << print(p) << " / " << print(q);
    EXPECT_TRUE(trace_equiv(Term::parallel(nil, x), Term::parallel(p, x), {}, 6)
                    .equivalent)
        << print(p) << " / " << print(x);
  }
}

TEST_F(SemanticsProperties, SilentClosureStartsAtTerm) {
  for (int i = 0; i < 300; ++i) {
    Term t = gen.next();
    auto c = silent_closure(t, {});
    ASSERT_FALSE(c.empty());
    EXPECT_EQ(c.front(), t);
  }
}

}  // namespace
}  // namespace nilcsp
