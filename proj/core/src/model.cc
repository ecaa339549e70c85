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

#include "tmkit/model.h"

#include <algorithm>
#include <cctype>
#include <functional>

namespace tmkit {

std::string_view stage_kind_name(StageKind kind) {
  switch (kind) {
    case StageKind::kCreate:
      return "create";
    case StageKind::kProcess:
      return "process";
    case StageKind::kRelease:
      return "release";
    case StageKind::kTransfer:
      return "transfer";
    case StageKind::kReceive:
      return "receive";
  }
  return "?";
}

std::optional<StageKind> parse_stage_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (StageKind kind : kAllStageKinds) {
    if (stage_kind_name(kind) == lower) return kind;
  }
  return std::nullopt;
}

std::string StageRef::thimac_path() const {
  std::string out;
  for (const auto& part : path) {
    if (!out.empty()) out += '.';
    out += part;
  }
  return out;
}

std::string StageRef::id() const {
  std::string out = thimac_path();
  out += '.';
  out += stage_kind_name(kind);
  return out;
}

std::string default_arc_id(std::size_t index) {
  return "arc" + std::to_string(index + 1);
}

LawTable LawTable::defaults() {
  using K = StageKind;
  LawTable table;
  table.successions_ = {
      {K::kCreate, K::kProcess},   {K::kCreate, K::kRelease},
      {K::kReceive, K::kProcess},  {K::kReceive, K::kRelease},
      {K::kProcess, K::kRelease},  {K::kRelease, K::kTransfer},
      {K::kTransfer, K::kReceive},
  };
  table.crossings_ = {{K::kTransfer, K::kTransfer}};
  return table;
}

bool LawTable::allows_succession(StageKind from, StageKind to) const {
  return successions_.contains({from, to});
}

bool LawTable::allows_crossing(StageKind from, StageKind to) const {
  return crossings_.contains({from, to});
}

bool LawTable::allow_succession(StageKind from, StageKind to) {
  if (to == StageKind::kCreate) return false;
  successions_.insert({from, to});
  return true;
}

bool LawTable::allow_crossing(StageKind from, StageKind to) {
  if (to == StageKind::kCreate) return false;
  crossings_.insert({from, to});
  return true;
}

void LawTable::deny_succession(StageKind from, StageKind to) {
  successions_.erase({from, to});
}

void LawTable::deny_crossing(StageKind from, StageKind to) {
  crossings_.erase({from, to});
}

void apply_law_rules(LawTable& table, const std::vector<LawRule>& rules) {
  for (const auto& rule : rules) {
    if (rule.crossing) {
      rule.allow ? (void)table.allow_crossing(rule.from, rule.to)
                 : table.deny_crossing(rule.from, rule.to);
    } else {
      rule.allow ? (void)table.allow_succession(rule.from, rule.to)
                 : table.deny_succession(rule.from, rule.to);
    }
  }
}

std::vector<LawRule> law_rules_from_defaults(const LawTable& table) {
  const LawTable base = LawTable::defaults();
  std::vector<LawRule> rules;
  auto diff = [&rules](const std::set<LawTable::Pair>& from,
                       const std::set<LawTable::Pair>& to, bool crossing) {
    for (const auto& [a, b] : from) {
      if (!to.contains({a, b})) rules.push_back({false, crossing, a, b, {}});
    }
    for (const auto& [a, b] : to) {
      if (!from.contains({a, b})) rules.push_back({true, crossing, a, b, {}});
    }
  };
  diff(base.successions(), table.successions(), false);
  diff(base.crossings(), table.crossings(), true);
  return rules;
}

const Thimac* StaticModel::find(const std::vector<std::string>& path) const {
  if (path.empty()) return nullptr;
  const std::vector<Thimac>* level = &roots;
  const Thimac* found = nullptr;
  for (const auto& part : path) {
    found = nullptr;
    for (const auto& t : *level) {
      if (t.id == part) {
        found = &t;
        break;
      }
    }
    if (found == nullptr) return nullptr;
    level = &found->children;
  }
  return found;
}

bool StaticModel::resolves(const StageRef& ref) const {
  const Thimac* t = find(ref.path);
  return t != nullptr && t->stages.contains(ref.kind);
}

std::vector<StageRef> StaticModel::stages() const {
  std::vector<StageRef> out;
  std::vector<std::string> path;
  std::function<void(const Thimac&)> walk = [&](const Thimac& t) {
    path.push_back(t.id);
    for (StageKind kind : t.stages) out.push_back(StageRef{path, kind});
    for (const auto& child : t.children) walk(child);
    path.pop_back();
  };
  for (const auto& root : roots) walk(root);
  return out;
}

std::size_t StaticModel::thimac_count() const {
  std::function<std::size_t(const Thimac&)> count =
      [&](const Thimac& t) -> std::size_t {
    std::size_t n = 1;
    for (const auto& child : t.children) n += count(child);
    return n;
  };
  std::size_t total = 0;
  for (const auto& root : roots) total += count(root);
  return total;
}

}  // namespace tmkit
