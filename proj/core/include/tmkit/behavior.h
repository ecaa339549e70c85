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

#ifndef TMKIT_BEHAVIOR_H_
#define TMKIT_BEHAVIOR_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tmkit/diagnostic.h"
#include "tmkit/dynamics.h"

namespace tmkit {

enum class BehaviorMode { kGraph, kPoset, kMixed };

// A chronology of events. Graph mode describes permitted walks (starts,
// edges, finals); poset mode describes permitted orderings of all nodes via
// "a before b" constraints. A chronology declaring both is mixed and must
// satisfy both.
struct Chronology {
  std::string name;
  std::set<EventId> nodes;
  std::set<EventId> starts;
  // Absent means "every sink is final".
  std::optional<std::set<EventId>> finals;
  std::set<EventPair> edges;
  std::set<EventPair> constraints;
  bool graph = false;
  bool poset = false;
  std::optional<SourceSpan> span;  // not part of equality

  BehaviorMode mode() const;

  // finals when declared, otherwise nodes without outgoing edges.
  std::set<EventId> effective_finals() const;

  friend bool operator==(const Chronology& a, const Chronology& b) {
    return a.name == b.name && a.nodes == b.nodes && a.starts == b.starts &&
           a.finals == b.finals && a.edges == b.edges &&
           a.constraints == b.constraints && a.graph == b.graph &&
           a.poset == b.poset;
  }
};

using Trace = std::vector<EventId>;

// Poset-mode enumeration refuses chronologies with more nodes than this.
inline constexpr std::size_t kMaxPosetNodes = 10;

enum class RejectReason {
  kNotStart,
  kNoEdge,
  kNotFinal,
  kConstraintViolated,
  kMissingEvent,
  kDuplicateEvent,
  kUnknownEvent,
};

std::string_view reject_reason_name(RejectReason reason);

struct Verdict {
  bool accepted = true;
  // Index of the first offending event, or the trace length for failures
  // detected at the end (NOT_FINAL, MISSING_EVENT).
  std::size_t position = 0;
  RejectReason reason = RejectReason::kNotStart;
  std::optional<EventPair> violated;  // CONSTRAINT_VIOLATED only

  static Verdict accept() { return Verdict{}; }
  static Verdict reject(std::size_t position, RejectReason reason,
                        std::optional<EventPair> violated = std::nullopt) {
    return Verdict{false, position, reason, std::move(violated)};
  }

  // "ACCEPT", "REJECT 1 NO_EDGE", "REJECT 0 CONSTRAINT_VIOLATED Serve<Eat".
  std::string to_string() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// EMPTY_START_SET and MALFORMED_CHRONOLOGY (members outside nodes).
std::vector<Diagnostic> check_well_formed(const Chronology& chron);

// Consistency of a chronology with the order induced by the static model.
// Graph mode: each induced pair (a, b) over nodes needs a to dominate b in
// the chronology graph rooted at a virtual super-start. Poset mode: the
// closure of constraints and induced pairs must be acyclic, and induced
// pairs not entailed by the constraints earn MISSING_CONSTRAINT warnings.
std::vector<Diagnostic> validate_chronology(const Chronology& chron,
                                            const InducedOrder& induced);

// Throws UsageError on an empty trace or a malformed chronology.
Verdict check_trace(const Chronology& chron, const Trace& trace,
                    bool strict_final);

// Graph mode: walks from a start to a final of at most max_len events.
// Poset and mixed mode: orderings of all nodes (max_len ignored), throwing
// BoundExceeded above kMaxPosetNodes nodes. Lexicographic order.
std::vector<Trace> enumerate_behaviors(const Chronology& chron,
                                       std::size_t max_len);

// Set union of nodes, starts, finals and edges. Graph-mode inputs only;
// throws UsageError otherwise or when `chrons` is empty.
Chronology union_behaviors(std::span<const Chronology> chrons);

}  // namespace tmkit

#endif  // TMKIT_BEHAVIOR_H_
