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

#include <sstream>

#include "tmkit/dsl.h"

namespace tmkit {
namespace {

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  out += '"';
  return out;
}

void print_thimac(std::ostringstream& out, const Thimac& thimac, int depth) {
  const std::string indent(2 * depth, ' ');
  out << indent << "thimac " << thimac.id;
  if (!thimac.name.empty()) out << ' ' << quote(thimac.name);
  out << " {\n";
  if (!thimac.stages.empty()) {
    out << indent << "  stages ";
    bool first = true;
    for (StageKind kind : thimac.stages) {
      out << (first ? "" : ", ") << stage_kind_name(kind);
      first = false;
    }
    out << '\n';
  }
  for (const auto& child : thimac.children) print_thimac(out, child, depth + 1);
  out << indent << "}\n";
}

template <typename Range, typename Fn>
void print_list(std::ostringstream& out, const Range& items, Fn print_item) {
  bool first = true;
  for (const auto& item : items) {
    if (!first) out << ", ";
    print_item(item);
    first = false;
  }
}

}  // namespace

std::string pretty_print(const StaticModel& model) {
  std::ostringstream out;
  bool need_gap = false;
  const auto rules = law_rules_from_defaults(model.laws);
  if (!rules.empty()) {
    out << "laws {\n";
    for (const auto& rule : rules) {
      out << "  " << (rule.allow ? "allow " : "deny ")
          << (rule.crossing ? "crossing " : "") << stage_kind_name(rule.from)
          << " -> " << stage_kind_name(rule.to) << ";\n";
    }
    out << "}\n";
    need_gap = true;
  }
  for (const auto& root : model.roots) {
    if (need_gap) out << '\n';
    print_thimac(out, root, 0);
    need_gap = true;
  }
  if (!model.arcs.empty() && need_gap) out << '\n';
  for (std::size_t i = 0; i < model.arcs.size(); ++i) {
    const Arc& arc = model.arcs[i];
    out << (arc.kind == ArcKind::kFlow ? "flow " : "trigger ");
    if (arc.id != default_arc_id(i)) out << arc.id << ": ";
    out << arc.source.id() << (arc.kind == ArcKind::kFlow ? " -> " : " ~> ")
        << arc.target.id() << ";\n";
  }
  return out.str();
}

std::string pretty_print(const std::vector<EventDef>& events) {
  std::ostringstream out;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const EventDef& event = events[i];
    if (i > 0) out << '\n';
    out << "event " << event.id;
    if (!event.name.empty()) out << ' ' << quote(event.name);
    out << " {\n  region: ";
    print_list(out, event.region,
               [&](const StageRef& ref) { out << ref.id(); });
    out << ";\n";
    if (event.time_label) out << "  time: " << quote(*event.time_label) << ";\n";
    out << "}\n";
  }
  return out.str();
}

std::string pretty_print(const Chronology& chron) {
  std::ostringstream out;
  auto ids = [&](const std::set<EventId>& set) {
    print_list(out, set, [&](const EventId& id) { out << id; });
  };
  out << "behavior " << chron.name << " {\n";
  out << "  nodes: ";
  ids(chron.nodes);
  out << ";\n";
  if (chron.graph) {
    out << "  start: ";
    ids(chron.starts);
    out << ";\n";
    if (chron.finals) {
      out << "  final: ";
      ids(*chron.finals);
      out << ";\n";
    }
    if (!chron.edges.empty()) {
      out << "  edges: ";
      print_list(out, chron.edges, [&](const EventPair& e) {
        out << e.first << " -> " << e.second;
      });
      out << ";\n";
    }
  }
  if (chron.poset) {
    out << "  require: ";
    print_list(out, chron.constraints, [&](const EventPair& c) {
      out << c.first << " < " << c.second;
    });
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tmkit
