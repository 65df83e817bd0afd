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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Every tolerance is exact except the law-suite time
// budget.

#include <httplib.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "nilcsp/generator.hpp"
#include "nilcsp/http_service.hpp"
#include "nilcsp/laws.hpp"
#include "nilcsp/parser.hpp"
#include "nilcsp/semantics.hpp"

namespace nilcsp {
namespace {

using json = nlohmann::json;

constexpr double kLawBudgetSeconds = 60.0;
constexpr std::size_t kGenerated = 1000;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string data(const std::string& name) {
  return std::string(NILCSP_TEST_DATA) + "/" + name;
}

std::set<Trace> trace_set(std::initializer_list<const char*> texts) {
  std::set<Trace> out;
  for (const char* t : texts) out.insert(parse_trace(t));
  return out;
}

Outcome vms_golden() {
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run({"traces", data("vms.csp"), "--process", "VMS",
                       "--depth", "8", "--json"},
                      in, out, err);
  if (code != 0) return {false, "exit " + std::to_string(code)};
  auto j = json::parse(out.str());
  std::vector<std::string> want = {"<>", "<coin>", "<coin,choc>",
                                   "<coin,choc,coin>", "<coin,choc,coin,choc>"};
  bool ok = j["traces"].get<std::vector<std::string>>() == want &&
            j["truncated"] == false;
  return {ok, std::to_string(j["traces"].size()) + " traces, truncated=" +
                  j["truncated"].dump()};
}

Outcome stop_characterization() {
  Term stop = desugar(parse_expression("mu X . nil -> X"));
  TraceSet ts = observable_traces(stop, {}, 8);
  Status s = classify(stop, {});
  auto closure = silent_closure(stop, {});
  bool ok = ts.traces == std::set<Trace>{Trace{}} && !ts.truncated &&
            s == Status::Quiescent && closure.size() == 1;
  return {ok, std::to_string(ts.traces.size()) + " trace, " +
                  std::string(to_string(s)) + ", closure size " +
                  std::to_string(closure.size())};
}

Outcome skip_characterization() {
  Term skip = desugar(Term::skip());
  if (classify(skip, {}) != Status::Terminating) {
    return {false, "classify != terminating"};
  }
  for (std::size_t d = 0; d <= 8; ++d) {
    std::set<Trace> want;
    Trace t;
    for (std::size_t i = 0; i <= d; ++i) {
      want.insert(t);
      t.push_back(Event::tick());
    }
    TraceSet got = observable_traces(skip, {}, d);
    if (got.traces != want || !got.truncated) {
      return {false, "mismatch at depth " + std::to_string(d)};
    }
  }
  return {true, "terminating; depths 0..8 exact"};
}

Outcome law_suite() {
  auto start = std::chrono::steady_clock::now();
  LawCheckOptions options{1000, 6, 6, 42};
  std::size_t failures = 0;
  std::string failed;
  for (auto law : kAllLaws) {
    LawReport r = check_law(law, options);
    if (!r.passed || r.instances_checked != options.samples) {
      ++failures;
      failed += " " + std::string(to_string(law));
    }
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  std::ostringstream detail;
  detail.precision(2);
  detail << std::fixed << kAllLaws.size() << " laws, " << failures
         << " failing" << failed << ", " << secs << " s (budget "
         << kLawBudgetSeconds << " s)";
  return {failures == 0 && secs < kLawBudgetSeconds, detail.str()};
}

Outcome normalization_soundness() {
  auto terms = gen_terms(42, 6, Alphabet{Event::named("a"), Event::named("b")},
                         kGenerated);
  std::size_t failures = 0;
  for (const auto& t : terms) {
    Normalization n = normalize(t);
    if (n.steps.size() > nil_prefix_count(t) ||
        !trace_equiv(t, n.term, {}, 6).equivalent) {
      ++failures;
    }
  }
  return {failures == 0, std::to_string(terms.size()) + " terms, " +
                             std::to_string(failures) + " failures"};
}

Outcome parser_round_trip() {
  TermGenerator gen(42, 6, Alphabet{Event::named("a"), Event::named("b")});
  std::size_t failures = 0;
  for (std::size_t i = 0; i < kGenerated; ++i) {
    Term t = gen.next_surface();
    try {
      if (!(parse_expression(print(t)) == t)) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  return {failures == 0, std::to_string(kGenerated) + " terms, " +
                             std::to_string(failures) + " failures"};
}

Outcome vmone_golden() {
  SourceFile f = parse("VMONE = coin -> (choc -> SKIP | toffee -> SKIP)\n");
  TraceSet ts =
      observable_traces(Term::ref("VMONE"), f.definitions.desugared(), 4);
  auto want = trace_set({"<>", "<coin>", "<coin,choc>", "<coin,toffee>",
                         "<coin,choc,tick>", "<coin,toffee,tick>",
                         "<coin,choc,tick,tick>", "<coin,toffee,tick,tick>"});
  return {ts.traces == want, std::to_string(ts.traces.size()) + " traces"};
}

Outcome session_conformance() {
  ServiceOptions options;
  options.port = 0;
  HttpService service(options);
  if (!service.bind()) return {false, "bind failed"};
  std::thread server([&] { service.serve(); });
  service.wait_until_ready();

  Outcome result{false, ""};
  {
    httplib::Client client("127.0.0.1", service.port());
    auto post = [&](const std::string& path, const json& body) {
      return client.Post(path, body.dump(), "application/json");
    };
    auto created = post(
        "/sessions",
        {{"source", "VMS = coin -> choc -> coin -> choc -> STOP\n"},
         {"process", "VMS"}});
    if (created && created->status == 201) {
      std::string id = json::parse(created->body)["id"];
      auto refused = post("/sessions/" + id + "/step", {{"event", "toffee"}});
      bool refused_ok =
          refused && refused->status == 409 &&
          json::parse(refused->body)["offered"] == json::array({"coin"});
      json last;
      bool steps_ok = true;
      for (const char* e : {"coin", "choc", "coin", "choc"}) {
        auto res = post("/sessions/" + id + "/step", {{"event", e}});
        if (!res || res->status != 200) {
          steps_ok = false;
          break;
        }
        last = json::parse(res->body);
      }
      bool final_ok = steps_ok && last["status"] == "quiescent" &&
                      last["events"] == json::array();
      result = {refused_ok && final_ok,
                "final status " + (steps_ok ? last["status"].dump() : "?") +
                    ", events " + (steps_ok ? last["events"].dump() : "?") +
                    ", non-offered -> " +
                    (refused ? std::to_string(refused->status) : "none")};
    } else {
      result = {false, "create failed"};
    }
  }
  service.stop();
  server.join();
  return result;
}

}  // namespace
}  // namespace nilcsp

int main() {
  using nilcsp::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> checks =
      {{"vms-golden", nilcsp::vms_golden},
       {"stop-characterization", nilcsp::stop_characterization},
       {"skip-characterization", nilcsp::skip_characterization},
       {"law-suite", nilcsp::law_suite},
       {"normalization-soundness", nilcsp::normalization_soundness},
       {"parser-round-trip", nilcsp::parser_round_trip},
       {"vmone-golden", nilcsp::vmone_golden},
       {"session-conformance", nilcsp::session_conformance}};
  int failed = 0;
  for (const auto& [name, check] : checks) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail
              << '\n';
    failed += o.pass ? 0 : 1;
  }
  std::cout << (checks.size() - failed) << "/" << checks.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
