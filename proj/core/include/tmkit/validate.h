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

#ifndef TMKIT_VALIDATE_H_
#define TMKIT_VALIDATE_H_

#include <set>
#include <vector>

#include "tmkit/diagnostic.h"
#include "tmkit/model.h"

namespace tmkit {

// Checks structural well-formedness and the flow laws. Never throws; an
// empty result means the model is valid. Output is sorted (see
// sort_diagnostics) so repeated runs are byte-identical.
//
// Codes: DUPLICATE_ID, DANGLING_REF, CREATE_INFLOW, ILLEGAL_SUCCESSION,
// ILLEGAL_CROSSING, SELF_TRIGGER.
std::vector<Diagnostic> validate_static(const StaticModel& model);

using Component = std::set<StageRef>;

// Weakly connected components over all stages. Stages of one thimac always
// share a component. Components are ordered by their smallest member.
// Fails with the validation diagnostics when the model has errors.
Outcome<std::vector<Component>> components(const StaticModel& model,
                                           bool include_triggers);

}  // namespace tmkit

#endif  // TMKIT_VALIDATE_H_
