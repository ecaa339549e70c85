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

#ifndef TMKIT_DOMINATORS_H_
#define TMKIT_DOMINATORS_H_

#include <cstddef>
#include <optional>
#include <vector>

namespace tmkit {

// Immediate dominators of a directed graph given as adjacency lists, using
// the iterative scheme of Cooper, Harvey and Kennedy. Nodes unreachable from
// the root have no immediate dominator.
class DominatorTree {
 public:
  DominatorTree(const std::vector<std::vector<std::size_t>>& successors,
                std::size_t root);

  bool reachable(std::size_t node) const { return idom_[node].has_value(); }

  std::optional<std::size_t> immediate_dominator(std::size_t node) const;

  // Reflexive: every reachable node dominates itself. Unreachable nodes are
  // dominated by everything, since no path reaches them.
  bool dominates(std::size_t a, std::size_t b) const;

  std::size_t size() const { return idom_.size(); }

 private:
  std::size_t root_;
  std::vector<std::optional<std::size_t>> idom_;
  std::vector<std::size_t> depth_;
};

}  // namespace tmkit

#endif  // TMKIT_DOMINATORS_H_
