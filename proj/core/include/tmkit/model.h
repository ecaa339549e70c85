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

#ifndef TMKIT_MODEL_H_
#define TMKIT_MODEL_H_

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmkit/diagnostic.h"

namespace tmkit {

// The five generic operations a thing can undergo. Declaration order is the
// canonical order used by the printer and the DOT renderer.
enum class StageKind { kCreate, kProcess, kRelease, kTransfer, kReceive };

inline constexpr std::array<StageKind, 5> kAllStageKinds = {
    StageKind::kCreate, StageKind::kProcess, StageKind::kRelease,
    StageKind::kTransfer, StageKind::kReceive};

std::string_view stage_kind_name(StageKind kind);

// Case-insensitive.
std::optional<StageKind> parse_stage_kind(std::string_view text);

// A thing/machine. Container thimacs may declare no stages at all.
struct Thimac {
  std::string id;
  std::string name;
  std::set<StageKind> stages;
  std::vector<Thimac> children;
  std::optional<SourceSpan> span;  // not part of equality

  friend bool operator==(const Thimac& a, const Thimac& b) {
    return a.id == b.id && a.name == b.name && a.stages == b.stages &&
           a.children == b.children;
  }
};

// Addresses one stage: the dotted thimac path from a root plus the kind.
struct StageRef {
  std::vector<std::string> path;
  StageKind kind = StageKind::kCreate;

  // "Customer.Money.release"
  std::string id() const;
  std::string thimac_path() const;

  friend bool operator==(const StageRef&, const StageRef&) = default;
  // Ordered by id() so that every listing in the toolkit sorts the same way.
  friend std::strong_ordering operator<=>(const StageRef& a,
                                          const StageRef& b) {
    return a.id() <=> b.id();
  }
};

enum class ArcKind { kFlow, kTrigger };

struct Arc {
  std::string id;
  ArcKind kind = ArcKind::kFlow;
  StageRef source;
  StageRef target;
  std::optional<SourceSpan> span;  // not part of equality

  friend bool operator==(const Arc& a, const Arc& b) {
    return a.id == b.id && a.kind == b.kind && a.source == b.source &&
           a.target == b.target;
  }
};

// Identifier given to the n-th arc (0-based) when the source omits one.
std::string default_arc_id(std::size_t index);

// Legal successions of flow. Intra-machine pairs apply between two stages of
// the same thimac; crossings apply between stages of different thimacs.
// Create is never accepted as a target.
class LawTable {
 public:
  using Pair = std::pair<StageKind, StageKind>;

  LawTable() = default;

  // Create->{Process, Release}, Receive->{Process, Release},
  // Process->{Release}, Release->{Transfer}, Transfer->{Receive};
  // crossings {(Transfer, Transfer)}.
  static LawTable defaults();

  bool allows_succession(StageKind from, StageKind to) const;
  bool allows_crossing(StageKind from, StageKind to) const;

  // Both return false (and leave the table unchanged) when `to` is Create.
  bool allow_succession(StageKind from, StageKind to);
  bool allow_crossing(StageKind from, StageKind to);
  void deny_succession(StageKind from, StageKind to);
  void deny_crossing(StageKind from, StageKind to);

  const std::set<Pair>& successions() const { return successions_; }
  const std::set<Pair>& crossings() const { return crossings_; }

  friend bool operator==(const LawTable&, const LawTable&) = default;

 private:
  std::set<Pair> successions_;
  std::set<Pair> crossings_;
};

// Edits applied on top of an existing law table, as written in a `laws`
// block. Order matters: later rules win.
struct LawRule {
  bool allow = true;
  bool crossing = false;
  StageKind from = StageKind::kCreate;
  StageKind to = StageKind::kCreate;
  std::optional<SourceSpan> span;

  friend bool operator==(const LawRule& a, const LawRule& b) {
    return a.allow == b.allow && a.crossing == b.crossing &&
           a.from == b.from && a.to == b.to;
  }
};

void apply_law_rules(LawTable& table, const std::vector<LawRule>& rules);

// Minimal rule list turning LawTable::defaults() into `table`.
std::vector<LawRule> law_rules_from_defaults(const LawTable& table);

struct StaticModel {
  std::vector<Thimac> roots;
  std::vector<Arc> arcs;
  LawTable laws = LawTable::defaults();

  // Resolves a dotted path from a root; nullptr when absent. Siblings with
  // duplicate ids resolve to the first one.
  const Thimac* find(const std::vector<std::string>& path) const;

  bool resolves(const StageRef& ref) const;

  // Every stage in depth-first source order.
  std::vector<StageRef> stages() const;

  std::size_t thimac_count() const;

  friend bool operator==(const StaticModel&, const StaticModel&) = default;
};

}  // namespace tmkit

#endif  // TMKIT_MODEL_H_
