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

#include "tmkit/behavior.h"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "tmkit/dominators.h"

namespace tmkit {
namespace {

std::string pair_text(const EventPair& p) { return p.first + "<" + p.second; }

std::map<EventId, std::vector<EventId>> successor_lists(
    const Chronology& chron) {
  std::map<EventId, std::vector<EventId>> out;
  for (const auto& [from, to] : chron.edges) out[from].push_back(to);
  return out;
}

void require_well_formed(const Chronology& chron) {
  const auto diagnostics = check_well_formed(chron);
  if (has_errors(diagnostics)) {
    throw UsageError("malformed chronology '" + chron.name +
                     "': " + diagnostics.front().message);
  }
}

Verdict check_walk(const Chronology& chron, const Trace& trace,
                   bool strict_final) {
  if (!chron.starts.contains(trace.front())) {
    return Verdict::reject(0, RejectReason::kNotStart);
  }
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (!chron.edges.contains({trace[i - 1], trace[i]})) {
      return Verdict::reject(i, RejectReason::kNoEdge);
    }
  }
  if (strict_final && !chron.effective_finals().contains(trace.back())) {
    return Verdict::reject(trace.size(), RejectReason::kNotFinal);
  }
  return Verdict::accept();
}

Verdict check_ordering(const Chronology& chron, const Trace& trace) {
  std::set<EventId> seen;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const EventId& event = trace[i];
    if (!chron.nodes.contains(event)) {
      return Verdict::reject(i, RejectReason::kUnknownEvent);
    }
    if (seen.contains(event)) {
      return Verdict::reject(i, RejectReason::kDuplicateEvent);
    }
    // Constraints are sorted, so the first hit is the smallest violated pair.
    for (const auto& constraint : chron.constraints) {
      if (constraint.second == event && !seen.contains(constraint.first)) {
        return Verdict::reject(i, RejectReason::kConstraintViolated,
                               constraint);
      }
    }
    seen.insert(event);
  }
  if (seen.size() != chron.nodes.size()) {
    return Verdict::reject(trace.size(), RejectReason::kMissingEvent);
  }
  return Verdict::accept();
}

void validate_dominance(const Chronology& chron, const InducedOrder& induced,
                        std::vector<Diagnostic>& out) {
  std::map<EventId, std::size_t> index;
  for (const auto& node : chron.nodes) index.emplace(node, index.size());
  const std::size_t super_start = index.size();
  std::vector<std::vector<std::size_t>> successors(index.size() + 1);
  for (const auto& start : chron.starts) {
    successors[super_start].push_back(index.at(start));
  }
  for (const auto& [from, to] : chron.edges) {
    successors[index.at(from)].push_back(index.at(to));
  }
  const DominatorTree tree(successors, super_start);

  for (const auto& [pair, arcs] : induced.precedences) {
    const auto a = index.find(pair.first);
    const auto b = index.find(pair.second);
    if (a == index.end() || b == index.end()) continue;
    if (a->second != b->second && tree.dominates(a->second, b->second)) {
      continue;
    }
    std::string justification;
    for (const auto& arc : arcs) {
      justification += justification.empty() ? arc : ", " + arc;
    }
    out.push_back(make_error(
        codes::kPrecedenceViolation,
        "behavior " + chron.name + ": " + pair.second +
            " can be reached without passing " + pair.first + ", but " +
            pair_text(pair) + " is induced by " + justification,
        chron.span));
  }
}

using Closure = std::vector<std::vector<bool>>;

Closure transitive_closure(const std::map<EventId, std::size_t>& index,
                           const std::set<EventPair>& pairs) {
  const std::size_t n = index.size();
  Closure reach(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : pairs) reach[index.at(a)][index.at(b)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  return reach;
}

void validate_ordering(const Chronology& chron, const InducedOrder& induced,
                       std::vector<Diagnostic>& out) {
  std::map<EventId, std::size_t> index;
  for (const auto& node : chron.nodes) index.emplace(node, index.size());

  std::set<EventPair> induced_pairs;
  for (const auto& [pair, arcs] : induced.precedences) {
    if (index.contains(pair.first) && index.contains(pair.second)) {
      induced_pairs.insert(pair);
    }
  }
  std::set<EventPair> combined = chron.constraints;
  combined.insert(induced_pairs.begin(), induced_pairs.end());

  const Closure all = transitive_closure(index, combined);
  for (const auto& pair : combined) {
    const std::size_t a = index.at(pair.first);
    const std::size_t b = index.at(pair.second);
    if (a == b || all[b][a]) {
      out.push_back(make_error(codes::kPrecedenceViolation,
                               "behavior " + chron.name + ": " +
                                   pair_text(pair) +
                                   " lies on a precedence cycle",
                               chron.span));
    }
  }

  const Closure declared = transitive_closure(index, chron.constraints);
  for (const auto& pair : induced_pairs) {
    if (!declared[index.at(pair.first)][index.at(pair.second)]) {
      out.push_back(make_warning(codes::kMissingConstraint,
                                 "behavior " + chron.name + ": induced " +
                                     pair_text(pair) +
                                     " is not entailed by the constraints",
                                 chron.span));
    }
  }
}

void enumerate_walks(const Chronology& chron, std::size_t max_len,
                     std::vector<Trace>& out) {
  const auto successors = successor_lists(chron);
  const std::set<EventId> finals = chron.effective_finals();
  Trace path;
  std::function<void(const EventId&)> visit = [&](const EventId& node) {
    path.push_back(node);
    if (finals.contains(node)) out.push_back(path);
    if (path.size() < max_len) {
      if (auto it = successors.find(node); it != successors.end()) {
        for (const auto& next : it->second) visit(next);
      }
    }
    path.pop_back();
  };
  for (const auto& start : chron.starts) visit(start);
}

void enumerate_orderings(const Chronology& chron, std::vector<Trace>& out) {
  if (chron.nodes.size() > kMaxPosetNodes) {
    throw BoundExceeded("behavior " + chron.name + " has " +
                        std::to_string(chron.nodes.size()) +
                        " events; ordering enumeration is limited to " +
                        std::to_string(kMaxPosetNodes));
  }
  std::map<EventId, std::vector<EventId>> prerequisites;
  for (const auto& [before, after] : chron.constraints) {
    prerequisites[after].push_back(before);
  }
  const bool walk = chron.graph;
  const std::set<EventId> finals =
      walk ? chron.effective_finals() : std::set<EventId>{};

  Trace path;
  std::set<EventId> placed;
  std::function<void()> extend = [&]() {
    if (path.size() == chron.nodes.size()) {
      if (!walk || finals.contains(path.back())) out.push_back(path);
      return;
    }
    for (const auto& node : chron.nodes) {
      if (placed.contains(node)) continue;
      const auto& before = prerequisites[node];
      if (!std::all_of(before.begin(), before.end(),
                       [&](const EventId& e) { return placed.contains(e); })) {
        continue;
      }
      if (walk) {
        if (path.empty() ? !chron.starts.contains(node)
                         : !chron.edges.contains({path.back(), node})) {
          continue;
        }
      }
      path.push_back(node);
      placed.insert(node);
      extend();
      placed.erase(node);
      path.pop_back();
    }
  };
  extend();
}

}  // namespace

BehaviorMode Chronology::mode() const {
  if (graph && poset) return BehaviorMode::kMixed;
  return poset ? BehaviorMode::kPoset : BehaviorMode::kGraph;
}

std::set<EventId> Chronology::effective_finals() const {
  if (finals) return *finals;
  std::set<EventId> sinks = nodes;
  for (const auto& edge : edges) sinks.erase(edge.first);
  return sinks;
}

std::string_view reject_reason_name(RejectReason reason) {
  switch (reason) {
    case RejectReason::kNotStart:
      return "NOT_START";
    case RejectReason::kNoEdge:
      return "NO_EDGE";
    case RejectReason::kNotFinal:
      return "NOT_FINAL";
    case RejectReason::kConstraintViolated:
      return "CONSTRAINT_VIOLATED";
    case RejectReason::kMissingEvent:
      return "MISSING_EVENT";
    case RejectReason::kDuplicateEvent:
      return "DUPLICATE_EVENT";
    case RejectReason::kUnknownEvent:
      return "UNKNOWN_EVENT";
  }
  return "?";
}

std::string Verdict::to_string() const {
  if (accepted) return "ACCEPT";
  std::ostringstream out;
  out << "REJECT " << position << ' ' << reject_reason_name(reason);
  if (violated) out << ' ' << pair_text(*violated);
  return out.str();
}

std::vector<Diagnostic> check_well_formed(const Chronology& chron) {
  std::vector<Diagnostic> out;
  auto malformed = [&](const std::string& what) {
    out.push_back(make_error(codes::kMalformedChronology,
                             "behavior " + chron.name + ": " + what,
                             chron.span));
  };
  auto check_member = [&](const EventId& id, std::string_view role) {
    if (!chron.nodes.contains(id)) {
      malformed(std::string(role) + " " + id + " is not a node");
    }
  };
  if (!chron.graph && !chron.poset) {
    malformed("declares neither a graph nor constraints");
  }
  if (chron.graph && chron.starts.empty()) {
    out.push_back(make_error(codes::kEmptyStartSet,
                             "behavior " + chron.name + " has no start event",
                             chron.span));
  }
  for (const auto& s : chron.starts) check_member(s, "start");
  if (chron.finals) {
    for (const auto& f : *chron.finals) check_member(f, "final");
  }
  for (const auto& [a, b] : chron.edges) {
    check_member(a, "edge source");
    check_member(b, "edge target");
  }
  for (const auto& [a, b] : chron.constraints) {
    check_member(a, "constrained event");
    check_member(b, "constrained event");
  }
  sort_diagnostics(out);
  return out;
}

std::vector<Diagnostic> validate_chronology(const Chronology& chron,
                                            const InducedOrder& induced) {
  std::vector<Diagnostic> out = check_well_formed(chron);
  if (has_errors(out)) return out;

  std::set<EventId> uncovered;
  for (const auto& [pair, arcs] : induced.precedences) {
    for (const EventId* id : {&pair.first, &pair.second}) {
      if (!chron.nodes.contains(*id)) uncovered.insert(*id);
    }
  }
  for (const auto& id : uncovered) {
    out.push_back(make_warning(codes::kUncoveredEvent,
                               "behavior " + chron.name + " does not mention " +
                                   id + ", which takes part in the induced order",
                               chron.span));
  }

  if (chron.graph) validate_dominance(chron, induced, out);
  if (chron.poset) validate_ordering(chron, induced, out);
  sort_diagnostics(out);
  return out;
}

Verdict check_trace(const Chronology& chron, const Trace& trace,
                    bool strict_final) {
  if (trace.empty()) throw UsageError("cannot check an empty trace");
  require_well_formed(chron);
  if (chron.graph) {
    Verdict verdict = check_walk(chron, trace, strict_final);
    if (!verdict.accepted) return verdict;
  }
  if (chron.poset) return check_ordering(chron, trace);
  return Verdict::accept();
}

std::vector<Trace> enumerate_behaviors(const Chronology& chron,
                                       std::size_t max_len) {
  require_well_formed(chron);
  std::vector<Trace> out;
  if (chron.poset) {
    enumerate_orderings(chron, out);
  } else {
    if (max_len == 0) throw UsageError("max_len must be positive");
    enumerate_walks(chron, max_len, out);
  }
  return out;
}

Chronology union_behaviors(std::span<const Chronology> chrons) {
  if (chrons.empty()) throw UsageError("union of no behaviors");
  Chronology out;
  out.graph = true;
  out.finals.emplace();
  std::set<std::string> names;
  for (const auto& chron : chrons) {
    if (chron.poset) {
      throw UsageError("behavior " + chron.name +
                       " uses constraints; only graph behaviors can be united");
    }
    std::istringstream parts(chron.name);
    for (std::string part; std::getline(parts, part, '+');) names.insert(part);
    out.nodes.insert(chron.nodes.begin(), chron.nodes.end());
    out.starts.insert(chron.starts.begin(), chron.starts.end());
    out.edges.insert(chron.edges.begin(), chron.edges.end());
    // Materialized so that sinks of an input stay final in the union.
    const auto finals = chron.effective_finals();
    out.finals->insert(finals.begin(), finals.end());
  }
  for (const auto& name : names) {
    out.name += out.name.empty() ? name : "+" + name;
  }
  return out;
}

}  // namespace tmkit
