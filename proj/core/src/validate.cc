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

#include "tmkit/validate.h"

#include <functional>
#include <map>
#include <string>

#include "disjoint_sets.h"

namespace tmkit {
namespace {

std::string describe(const Arc& arc) {
  return std::string(arc.kind == ArcKind::kFlow ? "flow " : "trigger ") +
         arc.id + " " + arc.source.id() +
         (arc.kind == ArcKind::kFlow ? " -> " : " ~> ") + arc.target.id();
}

void check_duplicate_ids(const StaticModel& model,
                         std::vector<Diagnostic>& out) {
  std::map<std::string, int> seen;
  auto note = [&](const std::string& id, const std::optional<SourceSpan>& span,
                  std::string_view what) {
    if (seen[id]++ > 0) {
      out.push_back(make_error(codes::kDuplicateId,
                               std::string(what) + " id '" + id +
                                   "' is already used in this model",
                               span));
    }
  };
  std::function<void(const Thimac&)> walk = [&](const Thimac& t) {
    note(t.id, t.span, "thimac");
    for (const auto& child : t.children) walk(child);
  };
  for (const auto& root : model.roots) walk(root);
  for (const auto& arc : model.arcs) note(arc.id, arc.span, "arc");
}

void check_arc(const StaticModel& model, const Arc& arc,
               std::vector<Diagnostic>& out) {
  bool resolved = true;
  for (const StageRef* end : {&arc.source, &arc.target}) {
    if (!model.resolves(*end)) {
      out.push_back(make_error(codes::kDanglingRef,
                               describe(arc) + ": no stage " + end->id(),
                               arc.span));
      resolved = false;
    }
  }
  if (!resolved) return;

  const bool same_thimac = arc.source.path == arc.target.path;
  if (arc.kind == ArcKind::kTrigger) {
    if (same_thimac) {
      out.push_back(make_error(
          codes::kSelfTrigger,
          describe(arc) + ": triggers must connect distinct thimacs",
          arc.span));
    }
    return;
  }

  const StageKind from = arc.source.kind;
  const StageKind to = arc.target.kind;
  if (to == StageKind::kCreate) {
    out.push_back(make_error(
        codes::kCreateInflow,
        describe(arc) + ": nothing flows into a create stage", arc.span));
  } else if (same_thimac && !model.laws.allows_succession(from, to)) {
    out.push_back(make_error(codes::kIllegalSuccession,
                             describe(arc) + ": " +
                                 std::string(stage_kind_name(from)) +
                                 " may not be followed by " +
                                 std::string(stage_kind_name(to)) +
                                 " inside a thimac",
                             arc.span));
  } else if (!same_thimac && !model.laws.allows_crossing(from, to)) {
    out.push_back(make_error(codes::kIllegalCrossing,
                             describe(arc) + ": flow may not cross from " +
                                 std::string(stage_kind_name(from)) +
                                 " to " + std::string(stage_kind_name(to)) +
                                 " between thimacs",
                             arc.span));
  }
}

}  // namespace

std::vector<Diagnostic> validate_static(const StaticModel& model) {
  std::vector<Diagnostic> out;
  check_duplicate_ids(model, out);
  for (const auto& arc : model.arcs) check_arc(model, arc, out);
  sort_diagnostics(out);
  return out;
}

Outcome<std::vector<Component>> components(const StaticModel& model,
                                           bool include_triggers) {
  Outcome<std::vector<Component>> result;
  result.diagnostics = validate_static(model);
  if (has_errors(result.diagnostics)) return result;

  const std::vector<StageRef> stages = model.stages();
  std::map<StageRef, std::size_t> index;
  for (std::size_t i = 0; i < stages.size(); ++i) index.emplace(stages[i], i);

  internal::DisjointSets sets(stages.size());
  // The thimac is a joint between its own stages.
  std::map<std::vector<std::string>, std::size_t> first_of_thimac;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    auto [it, inserted] = first_of_thimac.emplace(stages[i].path, i);
    if (!inserted) sets.unite(it->second, i);
  }
  for (const auto& arc : model.arcs) {
    if (arc.kind == ArcKind::kTrigger && !include_triggers) continue;
    sets.unite(index.at(arc.source), index.at(arc.target));
  }

  std::map<std::size_t, Component> grouped;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    grouped[sets.find(i)].insert(stages[i]);
  }
  std::vector<Component> out;
  out.reserve(grouped.size());
  for (auto& [root, members] : grouped) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const Component& a, const Component& b) {
              return *a.begin() < *b.begin();
            });
  result.value = std::move(out);
  return result;
}

}  // namespace tmkit
