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

#include "tmkit/dynamics.h"

#include <map>
#include <string>

#include "disjoint_sets.h"

namespace tmkit {
namespace {

std::string join_ids(const std::vector<StageRef>& refs) {
  std::string out;
  for (const auto& ref : refs) {
    if (!out.empty()) out += ", ";
    out += ref.id();
  }
  return out;
}

// True when the resolvable members of the region are weakly connected through
// arcs lying entirely inside the region.
bool region_connected(const StaticModel& model, const EventDef& event) {
  std::map<StageRef, std::size_t> index;
  for (const auto& member : event.region) {
    if (model.resolves(member)) index.emplace(member, index.size());
  }
  if (index.size() <= 1) return true;
  internal::DisjointSets sets(index.size());
  for (const auto& arc : model.arcs) {
    auto s = index.find(arc.source);
    auto t = index.find(arc.target);
    if (s != index.end() && t != index.end()) sets.unite(s->second, t->second);
  }
  const std::size_t root = sets.find(0);
  for (std::size_t i = 1; i < index.size(); ++i) {
    if (sets.find(i) != root) return false;
  }
  return true;
}

}  // namespace

std::vector<Diagnostic> validate_events(const StaticModel& model,
                                        const std::vector<EventDef>& events) {
  std::vector<Diagnostic> out;
  std::map<EventId, int> seen;
  for (const auto& event : events) {
    if (seen[event.id]++ > 0) {
      out.push_back(make_error(codes::kDuplicateEventId,
                               "event id '" + event.id + "' is declared twice",
                               event.span));
    }
    if (event.region.empty()) {
      out.push_back(make_error(codes::kEmptyRegion,
                               "event " + event.id + " has an empty region",
                               event.span));
      continue;
    }
    for (const auto& member : event.region) {
      if (!model.resolves(member)) {
        out.push_back(make_error(codes::kUnresolvedRegionMember,
                                 "event " + event.id + ": no stage " +
                                     member.id(),
                                 event.span));
      }
    }
    if (!region_connected(model, event)) {
      out.push_back(make_warning(
          codes::kDisconnectedRegion,
          "event " + event.id + ": region is not connected by its arcs",
          event.span));
    }
  }

  for (std::size_t i = 0; i < events.size(); ++i) {
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      std::vector<StageRef> shared;
      for (const auto& member : events[i].region) {
        if (events[j].region.contains(member)) shared.push_back(member);
      }
      if (!shared.empty()) {
        out.push_back(make_warning(codes::kOverlappingRegions,
                                   "events " + events[i].id + " and " +
                                       events[j].id + " share " +
                                       join_ids(shared),
                                   events[j].span));
      }
    }
  }
  sort_diagnostics(out);
  return out;
}

InducedOrder induce_order(const StaticModel& model,
                          const std::vector<EventDef>& events,
                          bool include_triggers) {
  std::map<StageRef, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < events.size(); ++i) {
    for (const auto& member : events[i].region) owners[member].push_back(i);
  }

  InducedOrder order;
  for (const auto& arc : model.arcs) {
    if (arc.kind == ArcKind::kTrigger && !include_triggers) continue;
    auto from = owners.find(arc.source);
    auto to = owners.find(arc.target);
    if (from == owners.end() || to == owners.end()) continue;
    for (std::size_t i : from->second) {
      for (std::size_t j : to->second) {
        if (i == j || events[i].id == events[j].id) continue;
        auto& arcs = order.precedences[{events[i].id, events[j].id}];
        if (arcs.empty() || arcs.back() != arc.id) arcs.push_back(arc.id);
      }
    }
  }
  return order;
}

}  // namespace tmkit
