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

#include "tmkit/dominators.h"

#include <stdexcept>
#include <utility>

namespace tmkit {

DominatorTree::DominatorTree(
    const std::vector<std::vector<std::size_t>>& successors, std::size_t root)
    : root_(root), idom_(successors.size()), depth_(successors.size(), 0) {
  const std::size_t n = successors.size();
  if (root >= n) throw std::out_of_range("dominator root out of range");

  // Iterative DFS for postorder numbering.
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> post_number(n, kUnvisited);
  std::vector<std::size_t> postorder;
  std::vector<bool> visited(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
  visited[root] = true;
  while (!stack.empty()) {
    auto& [node, next] = stack.back();
    if (next < successors[node].size()) {
      const std::size_t succ = successors[node][next++];
      if (!visited[succ]) {
        visited[succ] = true;
        stack.emplace_back(succ, 0);
      }
    } else {
      post_number[node] = postorder.size();
      postorder.push_back(node);
      stack.pop_back();
    }
  }

  std::vector<std::vector<std::size_t>> predecessors(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!visited[u]) continue;
    for (std::size_t v : successors[u]) predecessors[v].push_back(u);
  }

  auto intersect = [&](std::size_t a, std::size_t b) {
    while (a != b) {
      while (post_number[a] < post_number[b]) a = *idom_[a];
      while (post_number[b] < post_number[a]) b = *idom_[b];
    }
    return a;
  };

  idom_[root] = root;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = postorder.rbegin(); it != postorder.rend(); ++it) {
      const std::size_t node = *it;
      if (node == root) continue;
      std::optional<std::size_t> candidate;
      for (std::size_t pred : predecessors[node]) {
        if (!idom_[pred]) continue;
        candidate = candidate ? intersect(pred, *candidate) : pred;
      }
      if (candidate && idom_[node] != candidate) {
        idom_[node] = candidate;
        changed = true;
      }
    }
  }

  // Reverse postorder visits every node after its immediate dominator.
  for (auto it = postorder.rbegin(); it != postorder.rend(); ++it) {
    if (*it != root) depth_[*it] = depth_[*idom_[*it]] + 1;
  }
}

std::optional<std::size_t> DominatorTree::immediate_dominator(
    std::size_t node) const {
  if (node == root_) return std::nullopt;
  return idom_[node];
}

bool DominatorTree::dominates(std::size_t a, std::size_t b) const {
  if (!reachable(b)) return true;
  if (!reachable(a)) return false;
  while (depth_[b] > depth_[a]) b = *idom_[b];
  return a == b;
}

}  // namespace tmkit
