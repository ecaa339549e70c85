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

#include "tmkit/dot.h"

#include <algorithm>
#include <sstream>

namespace tmkit {
namespace {

constexpr std::string_view kFont = "Helvetica";
constexpr std::string_view kThimacColor = "#555555";
constexpr std::string_view kFlowColor = "#1f4e79";
constexpr std::string_view kTriggerColor = "#a05a00";
constexpr std::string_view kRegionColor = "#b22222";
constexpr std::string_view kFinalFill = "#d9d9d9";
constexpr std::string_view kConstraintColor = "#6a3d9a";

std::string quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

class DotWriter {
 public:
  explicit DotWriter(std::string_view graph_name) {
    out_ << "digraph " << quoted(graph_name) << " {\n";
    depth_ = 1;
  }

  void line(const std::string& text) {
    out_ << std::string(2 * depth_, ' ') << text << '\n';
  }
  void open(const std::string& header) {
    line(header + " {");
    ++depth_;
  }
  void close() {
    --depth_;
    line("}");
  }
  std::string finish() {
    out_ << "}\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
  int depth_ = 0;
};

std::vector<const Thimac*> sorted_by_id(const std::vector<Thimac>& thimacs) {
  std::vector<const Thimac*> out;
  for (const auto& t : thimacs) out.push_back(&t);
  std::stable_sort(out.begin(), out.end(),
                   [](const Thimac* a, const Thimac* b) { return a->id < b->id; });
  return out;
}

void write_thimac(DotWriter& dot, const Thimac& thimac,
                  std::vector<std::string>& path) {
  path.push_back(thimac.id);
  std::string path_text;
  for (const auto& p : path) path_text += path_text.empty() ? p : "." + p;
  dot.open("subgraph " + quoted("cluster_" + path_text));
  dot.line("label=" + quoted(thimac.id) + ";");
  dot.line("color=" + quoted(kThimacColor) + ";");
  for (StageKind kind : thimac.stages) {
    const std::string id = path_text + "." + std::string(stage_kind_name(kind));
    dot.line(quoted(id) + " [label=" + quoted(stage_kind_name(kind)) + "];");
  }
  for (const Thimac* child : sorted_by_id(thimac.children)) {
    write_thimac(dot, *child, path);
  }
  dot.close();
  path.pop_back();
}

void write_static_body(DotWriter& dot, const StaticModel& model) {
  dot.line("graph [rankdir=LR, compound=true, fontname=" + quoted(kFont) +
           "];");
  dot.line("node [shape=box, style=rounded, fontname=" + quoted(kFont) + "];");
  dot.line("edge [fontname=" + quoted(kFont) + "];");
  std::vector<std::string> path;
  for (const Thimac* root : sorted_by_id(model.roots)) {
    write_thimac(dot, *root, path);
  }
  std::vector<const Arc*> arcs;
  for (const auto& arc : model.arcs) arcs.push_back(&arc);
  std::stable_sort(arcs.begin(), arcs.end(),
                   [](const Arc* a, const Arc* b) { return a->id < b->id; });
  for (const Arc* arc : arcs) {
    const bool flow = arc->kind == ArcKind::kFlow;
    dot.line(quoted(arc->source.id()) + " -> " + quoted(arc->target.id()) +
             " [id=" + quoted(arc->id) +
             (flow ? ", style=solid, color=" : ", style=dashed, color=") +
             quoted(flow ? kFlowColor : kTriggerColor) + "];");
  }
}

void write_regions(DotWriter& dot, const std::vector<EventDef>& events) {
  std::vector<const EventDef*> sorted;
  for (const auto& e : events) sorted.push_back(&e);
  std::stable_sort(
      sorted.begin(), sorted.end(),
      [](const EventDef* a, const EventDef* b) { return a->id < b->id; });
  for (const EventDef* event : sorted) {
    dot.open("subgraph " + quoted("cluster_event_" + event->id));
    dot.line("label=" + quoted(event->id) + ";");
    dot.line("style=dashed;");
    dot.line("color=" + quoted(kRegionColor) + ";");
    for (const auto& member : event->region) dot.line(quoted(member.id()) + ";");
    dot.close();
  }
}

void write_behavior(DotWriter& dot, const Chronology& chron) {
  dot.line("graph [rankdir=LR, fontname=" + quoted(kFont) + "];");
  dot.line("node [shape=ellipse, fontname=" + quoted(kFont) + "];");
  dot.line("edge [fontname=" + quoted(kFont) + "];");
  const std::set<EventId> finals =
      chron.graph ? chron.effective_finals() : std::set<EventId>{};
  for (const auto& node : chron.nodes) {
    std::vector<std::string> attrs;
    if (chron.graph && chron.starts.contains(node)) {
      attrs.push_back("peripheries=2");
    }
    if (finals.contains(node)) {
      attrs.push_back("style=filled");
      attrs.push_back("fillcolor=" + quoted(kFinalFill));
    }
    std::string text = quoted(node);
    if (!attrs.empty()) {
      text += " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) {
        text += (i ? ", " : "") + attrs[i];
      }
      text += "]";
    }
    dot.line(text + ";");
  }
  for (const auto& [from, to] : chron.edges) {
    dot.line(quoted(from) + " -> " + quoted(to) + ";");
  }
  for (const auto& [before, after] : chron.constraints) {
    dot.line(quoted(before) + " -> " + quoted(after) +
             " [style=dotted, color=" + quoted(kConstraintColor) +
             ", label=\"<\"];");
  }
}

}  // namespace

std::optional<RenderKind> parse_render_kind(std::string_view text) {
  if (text == "static") return RenderKind::kStatic;
  if (text == "events") return RenderKind::kEvents;
  if (text == "behavior") return RenderKind::kBehavior;
  return std::nullopt;
}

std::string to_dot(RenderKind kind, const RenderInputs& inputs) {
  switch (kind) {
    case RenderKind::kStatic: {
      if (inputs.model == nullptr) {
        throw UsageError("static rendering needs a model");
      }
      DotWriter dot("static");
      write_static_body(dot, *inputs.model);
      return dot.finish();
    }
    case RenderKind::kEvents: {
      if (inputs.model == nullptr || inputs.events == nullptr) {
        throw UsageError("events rendering needs a model and events");
      }
      DotWriter dot("events");
      write_static_body(dot, *inputs.model);
      write_regions(dot, *inputs.events);
      return dot.finish();
    }
    case RenderKind::kBehavior: {
      if (inputs.chronology == nullptr) {
        throw UsageError("behavior rendering needs a chronology");
      }
      DotWriter dot("behavior_" + inputs.chronology->name);
      write_behavior(dot, *inputs.chronology);
      return dot.finish();
    }
  }
  throw UsageError("unknown render kind");
}

}  // namespace tmkit
