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

#include "cli.hpp"

#include <CLI11.hpp>
#include <csignal>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "nilcsp/animation.hpp"
#include "nilcsp/error.hpp"
#include "nilcsp/http_service.hpp"
#include "nilcsp/laws.hpp"
#include "nilcsp/parser.hpp"
#include "nilcsp/semantics.hpp"
#include "nilcsp/session.hpp"

namespace nilcsp::cli {

namespace {

using json = nlohmann::ordered_json;

struct Usage : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Usage("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// A loaded file with desugared definitions, ready to execute.
struct Program {
  SourceFile source;
  Definitions defs;

  explicit Program(const std::string& path)
      : source(parse(read_file(path))),
        defs(source.definitions.desugared()) {}

  // `expr` may be a process name or any expression over the definitions;
  // empty selects the file's main expression.
  Term process(const std::string& expr) const {
    if (expr.empty()) {
      if (!source.main) {
        throw Usage("no process given and the file has no main expression");
      }
      return desugar(*source.main);
    }
    return desugar(parse_expression(expr, source.definitions));
  }
};

int cmd_parse(const std::string& path, std::ostream& out) {
  SourceFile file = parse(read_file(path));
  for (const auto& d : file.definitions.entries()) {
    out << print_definition(d) << '\n';
  }
  if (file.main) out << print(*file.main) << '\n';
  return kSuccess;
}

int cmd_traces(const std::string& path, const std::string& process,
               std::size_t depth, bool as_json, std::ostream& out,
               std::ostream& err) {
  Program program(path);
  TraceSet traces = observable_traces(program.process(process), program.defs,
                                      depth);
  if (as_json) {
    json j;
    j["process"] = process;
    j["depth"] = depth;
    j["truncated"] = traces.truncated;
    j["traces"] = json::array();
    for (const auto& t : traces.traces) j["traces"].push_back(format_trace(t));
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  for (const auto& t : traces.traces) out << format_trace(t) << '\n';
  if (traces.truncated) {
    err << "note: truncated at depth " << depth << '\n';
  }
  return kSuccess;
}

int cmd_equiv(const std::string& path, const std::string& a,
              const std::string& b, std::size_t depth, bool as_json,
              std::ostream& out) {
  Program program(path);
  auto result = trace_equiv(program.process(a), program.process(b),
                            program.defs, depth);
  if (as_json) {
    json j;
    j["a"] = a;
    j["b"] = b;
    j["depth"] = depth;
    j["equivalent"] = result.equivalent;
    j["witness"] = result.witness ? json(format_trace(*result.witness))
                                  : json(nullptr);
    out << j.dump(2) << '\n';
  } else if (result.equivalent) {
    out << "equivalent (depth " << depth << ")\n";
  } else {
    out << "NOT equivalent; witness " << format_trace(*result.witness)
        << '\n';
  }
  return result.equivalent ? kSuccess : kPropertyFails;
}

int cmd_classify(const std::string& path, const std::string& process,
                 bool fail_on_quiescent, std::ostream& out) {
  Program program(path);
  Status s = classify(program.process(process), program.defs);
  out << to_string(s) << '\n';
  return fail_on_quiescent && s == Status::Quiescent ? kPropertyFails
                                                     : kSuccess;
}

int cmd_check_laws(const LawCheckOptions& options,
                   const std::vector<std::string>& only, bool as_json,
                   std::ostream& out) {
  std::vector<LawId> laws;
  for (const auto& name : only) {
    auto law = law_from_string(name);
    if (!law) throw Usage("unknown law '" + name + "'");
    laws.push_back(*law);
  }
  if (laws.empty()) laws.assign(kAllLaws.begin(), kAllLaws.end());

  std::vector<LawReport> reports;
  bool all_passed = true;
  for (auto law : laws) {
    reports.push_back(check_law(law, options));
    all_passed = all_passed && reports.back().passed;
  }
  if (as_json) {
    out << render_json(reports) << '\n';
  } else {
    out << render_text(reports);
  }
  return all_passed ? kSuccess : kPropertyFails;
}

int cmd_animate(const std::string& path, const std::string& process,
                std::istream& in, std::ostream& out) {
  Program program(path);
  Animation animation(program.defs, program.process(process));
  run_animator(animation, in, out);
  return kSuccess;
}

HttpService* g_service = nullptr;

extern "C" void stop_service(int) {
  if (g_service) g_service->stop();
}

int cmd_serve(const ServiceOptions& options, std::ostream& out,
              std::ostream& err) {
  HttpService service(options);
  if (!service.bind()) {
    err << "error: cannot listen on " << options.bind_address << ":"
        << options.port << '\n';
    return kUsageOrParse;
  }
  out << "listening on http://" << options.bind_address << ":"
      << service.port() << std::endl;
  g_service = &service;
  std::signal(SIGINT, stop_service);
  std::signal(SIGTERM, stop_service);
  service.serve();
  g_service = nullptr;
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"nilcsp: process terms with a silent nil event"};
  app.name("nilcsp");
  app.require_subcommand(1);

  std::string file;
  std::string process;
  std::size_t depth = 8;
  bool as_json = false;

  auto* parse_cmd = app.add_subcommand("parse", "Parse a file and print it");
  parse_cmd->add_option("file", file, "Source file (.csp)")->required();

  auto* traces_cmd =
      app.add_subcommand("traces", "List observable traces up to a depth");
  traces_cmd->add_option("file", file, "Source file (.csp)")->required();
  traces_cmd->add_option("--process,-p", process,
                         "Process name or expression (default: main)");
  traces_cmd->add_option("--depth,-d", depth, "Observable event budget")
      ->capture_default_str();
  traces_cmd->add_flag("--json", as_json, "Emit JSON");

  std::string equiv_a;
  std::string equiv_b;
  auto* equiv_cmd = app.add_subcommand(
      "equiv", "Compare two processes by observable traces");
  equiv_cmd->add_option("file", file, "Source file (.csp)")->required();
  equiv_cmd->add_option("a", equiv_a, "First process or expression")
      ->required();
  equiv_cmd->add_option("b", equiv_b, "Second process or expression")
      ->required();
  equiv_cmd->add_option("--depth,-d", depth, "Observable event budget")
      ->capture_default_str();
  equiv_cmd->add_flag("--json", as_json, "Emit JSON");

  bool fail_on_quiescent = false;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Report live, quiescent or terminating");
  classify_cmd->add_option("file", file, "Source file (.csp)")->required();
  classify_cmd->add_option("process", process, "Process name or expression")
      ->required();
  classify_cmd->add_flag("--fail-on-quiescent", fail_on_quiescent,
                         "Exit 1 when the process is quiescent");

  LawCheckOptions law_options;
  std::vector<std::string> only_laws;
  auto* laws_cmd = app.add_subcommand(
      "check-laws", "Check the nil laws on generated instances");
  laws_cmd->add_option("--samples,-n", law_options.samples,
                       "Instances per law")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  laws_cmd->add_option("--size,-s", law_options.size_bound,
                       "Operator bound for generated terms")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  laws_cmd->add_option("--depth,-d", law_options.depth,
                       "Observable event budget")
      ->capture_default_str();
  laws_cmd->add_option("--seed,-k", law_options.seed, "Generator seed")
      ->capture_default_str()
      ->envname("NILCSP_SEED");
  laws_cmd->add_option("--law", only_laws, "Restrict to these laws (L1..T5)");
  laws_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* animate_cmd = app.add_subcommand(
      "animate", "Play the environment against a process");
  animate_cmd->add_option("file", file, "Source file (.csp)")->required();
  animate_cmd->add_option("process", process, "Process name or expression")
      ->required();

  ServiceOptions service_options;
  auto* serve_cmd =
      app.add_subcommand("serve", "Run the HTTP session service");
  serve_cmd->add_option("--port", service_options.port, "TCP port")
      ->capture_default_str();
  serve_cmd->add_option("--bind", service_options.bind_address,
                        "Listen address")
      ->capture_default_str();
  serve_cmd->add_option("--capacity", service_options.session_capacity,
                        "Maximum live sessions")
      ->capture_default_str();
  serve_cmd->add_option("--cors-origin", service_options.cors_origin,
                        "Access-Control-Allow-Origin value")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageOrParse;
  }

  try {
    if (*parse_cmd) return cmd_parse(file, out);
    if (*traces_cmd) {
      return cmd_traces(file, process, depth, as_json, out, err);
    }
    if (*equiv_cmd) {
      return cmd_equiv(file, equiv_a, equiv_b, depth, as_json, out);
    }
    if (*classify_cmd) {
      return cmd_classify(file, process, fail_on_quiescent, out);
    }
    if (*laws_cmd) {
      return cmd_check_laws(law_options, only_laws, as_json, out);
    }
    if (*animate_cmd) return cmd_animate(file, process, in, out);
    if (*serve_cmd) return cmd_serve(service_options, out, err);
  } catch (const ParseError& e) {
    err << file << ":" << e.line() << ":" << e.column()
        << ": error: " << e.message() << '\n';
    return kUsageOrParse;
  } catch (const ResolveError& e) {
    err << file << ":" << e.line() << ":" << e.column()
        << ": error: " << e.message() << '\n';
    return kSemantic;
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kSemantic;
  }
  return kUsageOrParse;
}

}  // namespace nilcsp::cli
