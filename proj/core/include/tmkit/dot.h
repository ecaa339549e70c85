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

#ifndef TMKIT_DOT_H_
#define TMKIT_DOT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tmkit/behavior.h"
#include "tmkit/dynamics.h"
#include "tmkit/model.h"

namespace tmkit {

enum class RenderKind { kStatic, kEvents, kBehavior };

std::optional<RenderKind> parse_render_kind(std::string_view text);

struct RenderInputs {
  const StaticModel* model = nullptr;
  const std::vector<EventDef>* events = nullptr;
  const Chronology* chronology = nullptr;
};

// Renders one level as a Graphviz digraph (format in docs/dot-format.md).
// Static needs a model, Events a model and events, Behavior a chronology;
// a missing input throws UsageError.
std::string to_dot(RenderKind kind, const RenderInputs& inputs);

}  // namespace tmkit

#endif  // TMKIT_DOT_H_
