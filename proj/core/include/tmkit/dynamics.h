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

#ifndef TMKIT_DYNAMICS_H_
#define TMKIT_DYNAMICS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tmkit/diagnostic.h"
#include "tmkit/model.h"

namespace tmkit {

using EventId = std::string;

// An event occupies a region of the static model. Arcs whose endpoints both
// lie in the region belong to it implicitly.
struct EventDef {
  EventId id;
  std::string name;
  std::set<StageRef> region;
  std::optional<std::string> time_label;  // opaque
  std::optional<SourceSpan> span;         // not part of equality

  friend bool operator==(const EventDef& a, const EventDef& b) {
    return a.id == b.id && a.name == b.name && a.region == b.region &&
           a.time_label == b.time_label;
  }
};

using EventPair = std::pair<EventId, EventId>;

// Precedences forced by arcs crossing from one region into another. Each
// pair keeps the ids of the arcs that justify it, in model order. Not
// transitively closed.
struct InducedOrder {
  std::map<EventPair, std::vector<std::string>> precedences;

  bool contains(const EventId& before, const EventId& after) const {
    return precedences.contains({before, after});
  }
  std::size_t size() const { return precedences.size(); }
};

// EMPTY_REGION, UNRESOLVED_REGION_MEMBER, DUPLICATE_EVENT_ID (errors);
// DISCONNECTED_REGION, OVERLAPPING_REGIONS (warnings).
std::vector<Diagnostic> validate_events(const StaticModel& model,
                                        const std::vector<EventDef>& events);

// Ei precedes Ej iff an arc leaves region(Ei) and enters region(Ej), i != j.
// Trigger arcs count only when include_triggers is set.
InducedOrder induce_order(const StaticModel& model,
                          const std::vector<EventDef>& events,
                          bool include_triggers);

}  // namespace tmkit

#endif  // TMKIT_DYNAMICS_H_
