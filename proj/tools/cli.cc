// Copyright 2026 The tmkit Authors.
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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "tmkit/behavior.h"
#include "tmkit/dot.h"
#include "tmkit/dsl.h"
#include "tmkit/dynamics.h"
#include "tmkit/validate.h"

namespace tmkit::cli {
namespace {

// Carries an exit status out of a command.
struct Exit {
  int status;
};

struct Options {
  std::string model_path;
  std::string events_path;
  std::string behavior_path;
  std::string laws_path;
  std::string behavior_name;
  std::string trace_text;
  std::string out_path;
  std::string kind = "static";
  std::vector<std::string> render_paths;
  std::size_t max_len = 16;
  bool strict_final = false;
  bool no_triggers = false;
  bool with_triggers = false;
  bool strict_warnings = false;
};

class Session {
 public:
  Session(const Options& options, std::ostream& out, std::ostream& err)
      : opt_(options), out_(out), err_(err) {}

  int check() {
    const StaticModel model = load_model(opt_.model_path);
    std::vector<Diagnostic> all = validate_static(model);
    if (!opt_.events_path.empty() && !has_errors(all)) {
      const auto events = load_events(opt_.events_path, model);
      append(all, validate_events(model, events));
      if (!opt_.behavior_path.empty() && !has_errors(all)) {
        const InducedOrder induced =
            induce_order(model, events, !opt_.no_triggers);
        for (const auto& chron : load_behaviors(opt_.behavior_path, events)) {
          append(all, validate_chronology(chron, induced));
        }
      }
    } else if (!opt_.behavior_path.empty() && opt_.events_path.empty()) {
      err_ << "error: --behavior needs --events\n";
      return kExitUsage;
    }
    print(all);
    return failing(all) ? kExitRejected : kExitOk;
  }

  int trace() {
    const Chronology chron = load_all_valid();
    const Trace trace = split_trace(opt_.trace_text);
    if (trace.empty()) {
      err_ << "error: empty trace\n";
      return kExitUsage;
    }
    const Verdict verdict = check_trace(chron, trace, opt_.strict_final);
    out_ << verdict.to_string() << '\n';
    return verdict.accepted ? kExitOk : kExitRejected;
  }

  int enumerate() {
    const Chronology chron = load_all_valid();
    if (opt_.max_len == 0) {
      err_ << "error: --max-len must be positive\n";
      return kExitUsage;
    }
    std::vector<Trace> traces;
    try {
      traces = enumerate_behaviors(chron, opt_.max_len);
    } catch (const BoundExceeded& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    for (const auto& t : traces) {
      for (std::size_t i = 0; i < t.size(); ++i) out_ << (i ? "," : "") << t[i];
      out_ << '\n';
    }
    return kExitOk;
  }

  int render() {
    const auto kind = parse_render_kind(opt_.kind);
    if (!kind) {
      err_ << "error: unknown render kind '" << opt_.kind << "'\n";
      return kExitUsage;
    }
    const std::size_t needed = *kind == RenderKind::kStatic   ? 1
                               : *kind == RenderKind::kEvents ? 2
                                                              : 3;
    if (opt_.render_paths.size() != needed) {
      err_ << "error: --kind " << opt_.kind << " takes " << needed
           << " input path(s)\n";
      return kExitUsage;
    }
    const StaticModel model = load_valid_model(opt_.render_paths[0]);
    std::vector<EventDef> events;
    std::optional<Chronology> chron;
    if (needed >= 2) events = load_valid_events(opt_.render_paths[1], model);
    if (needed == 3) {
      chron = load_valid_behavior(opt_.render_paths[2], model, events);
    }
    const std::string dot =
        to_dot(*kind, RenderInputs{&model, &events, chron ? &*chron : nullptr});
    std::ofstream file(opt_.out_path, std::ios::binary);
    file << dot;
    if (!file.good()) {
      err_ << "error: cannot write " << opt_.out_path << '\n';
      return kExitUsage;
    }
    return kExitOk;
  }

  int components() {
    const StaticModel model = load_model(opt_.model_path);
    const auto result = tmkit::components(model, opt_.with_triggers);
    if (!result.ok()) {
      print(result.diagnostics);
      return kExitRejected;
    }
    for (const auto& component : *result) {
      bool first = true;
      for (const auto& stage : component) {
        out_ << (first ? "" : " ") << stage.id();
        first = false;
      }
      out_ << '\n';
    }
    return kExitOk;
  }

 private:
  static void append(std::vector<Diagnostic>& into,
                     std::vector<Diagnostic> more) {
    into.insert(into.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
  }

  bool failing(const std::vector<Diagnostic>& diagnostics) const {
    return has_errors(diagnostics) ||
           (opt_.strict_warnings && !diagnostics.empty());
  }

  void print(const std::vector<Diagnostic>& diagnostics) {
    for (const auto& d : diagnostics) err_ << format_diagnostic(d) << '\n';
  }

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      err_ << "error: cannot read " << path << '\n';
      throw Exit{kExitUsage};
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  template <typename T>
  T take(Outcome<T> outcome) {
    print(outcome.diagnostics);
    if (!outcome.ok()) throw Exit{kExitUsage};
    return std::move(*outcome.value);
  }

  // Prints diagnostics; validation failures make the inputs unusable.
  void require_valid(const std::vector<Diagnostic>& diagnostics) {
    print(diagnostics);
    if (failing(diagnostics)) throw Exit{kExitUsage};
  }

  StaticModel load_model(const std::string& path) {
    StaticModel model = take(parse_model(read(path), path));
    if (!opt_.laws_path.empty()) {
      const auto rules =
          take(parse_laws(read(opt_.laws_path), opt_.laws_path));
      apply_law_rules(model.laws, rules);
    }
    return model;
  }

  std::vector<EventDef> load_events(const std::string& path,
                                    const StaticModel& model) {
    return take(parse_events(read(path), path, model));
  }

  // Every behavior in the file, or only the one picked with --name.
  std::vector<Chronology> load_behaviors(const std::string& path,
                                         const std::vector<EventDef>& events) {
    auto all = take(parse_behaviors(read(path), path, events));
    if (opt_.behavior_name.empty()) return all;
    for (auto& chron : all) {
      if (chron.name == opt_.behavior_name) return {std::move(chron)};
    }
    err_ << "error: " << path << " has no behavior named '"
         << opt_.behavior_name << "'\n";
    throw Exit{kExitUsage};
  }

  Chronology load_behavior(const std::string& path,
                           const std::vector<EventDef>& events) {
    auto all = load_behaviors(path, events);
    if (all.size() != 1) {
      err_ << "error: " << path << " holds " << all.size()
           << " behaviors; choose one with --name\n";
      throw Exit{kExitUsage};
    }
    return std::move(all.front());
  }

  StaticModel load_valid_model(const std::string& path) {
    StaticModel model = load_model(path);
    require_valid(validate_static(model));
    return model;
  }

  std::vector<EventDef> load_valid_events(const std::string& path,
                                          const StaticModel& model) {
    auto events = load_events(path, model);
    require_valid(validate_events(model, events));
    return events;
  }

  Chronology load_valid_behavior(const std::string& path,
                                 const StaticModel& model,
                                 const std::vector<EventDef>& events) {
    Chronology chron = load_behavior(path, events);
    require_valid(validate_chronology(
        chron, induce_order(model, events, !opt_.no_triggers)));
    return chron;
  }

  Chronology load_all_valid() {
    const StaticModel model = load_valid_model(opt_.model_path);
    const auto events = load_valid_events(opt_.events_path, model);
    return load_valid_behavior(opt_.behavior_path, model, events);
  }

  static Trace split_trace(const std::string& text) {
    Trace trace;
    std::istringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      if (!item.empty()) trace.push_back(item);
    }
    return trace;
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Thinging machine models: static flows, events, behaviors",
               "tmkit"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.add_option("--laws", opt.laws_path,
                 "File with a laws { ... } block applied on top of the "
                 "model's law table");
  app.add_flag("--strict-warnings", opt.strict_warnings,
               "Treat warnings as errors");

  auto* check = app.add_subcommand("check", "Validate a model and its events");
  check->add_option("model", opt.model_path, "Model file (.tm)")->required();
  check->add_option("--events", opt.events_path, "Event file (.tme)");
  check->add_option("--behavior", opt.behavior_path,
                    "Behavior file (.tmb); needs --events");
  check->add_option("--name", opt.behavior_name,
                    "Check only this behavior (default: all of them)");
  check->add_flag("--no-triggers", opt.no_triggers,
                  "Triggers do not induce precedence");

  auto* trace = app.add_subcommand("trace", "Check one trace against a behavior");
  trace->add_option("model", opt.model_path, "Model file (.tm)")->required();
  trace->add_option("events", opt.events_path, "Event file (.tme)")->required();
  trace->add_option("behavior", opt.behavior_path, "Behavior file (.tmb)")
      ->required();
  trace->add_option("trace", opt.trace_text, "Comma-separated event ids")
      ->required();
  trace->add_option("--name", opt.behavior_name, "Behavior to use");
  trace->add_flag("--strict-final", opt.strict_final,
                  "The trace must end in a final event");
  trace->add_flag("--no-triggers", opt.no_triggers,
                  "Triggers do not induce precedence");

  auto* enumerate =
      app.add_subcommand("enumerate", "List the traces a behavior permits");
  enumerate->add_option("model", opt.model_path, "Model file (.tm)")->required();
  enumerate->add_option("events", opt.events_path, "Event file (.tme)")
      ->required();
  enumerate->add_option("behavior", opt.behavior_path, "Behavior file (.tmb)")
      ->required();
  enumerate->add_option("--max-len", opt.max_len,
                        "Longest walk in graph mode");
  enumerate->add_option("--name", opt.behavior_name, "Behavior to use");
  enumerate->add_flag("--no-triggers", opt.no_triggers,
                      "Triggers do not induce precedence");

  auto* render = app.add_subcommand("render", "Write a Graphviz DOT file");
  render->add_option("--kind", opt.kind, "static, events or behavior");
  render->add_option("inputs", opt.render_paths,
                     "Model, then events, then behavior, as the kind needs")
      ->required();
  render->add_option("-o,--output", opt.out_path, "Output DOT file")
      ->required();
  render->add_option("--name", opt.behavior_name, "Behavior to render");
  render->add_flag("--no-triggers", opt.no_triggers,
                   "Triggers do not induce precedence");

  auto* components =
      app.add_subcommand("components", "List weakly connected subdiagrams");
  components->add_option("model", opt.model_path, "Model file (.tm)")
      ->required();
  components->add_flag("--with-triggers", opt.with_triggers,
                       "Trigger arcs join components");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Session session(opt, out, err);
  try {
    if (*check) return session.check();
    if (*trace) return session.trace();
    if (*enumerate) return session.enumerate();
    if (*render) return session.render();
    if (*components) return session.components();
  } catch (const Exit& exit) {
    return exit.status;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tmkit::cli
