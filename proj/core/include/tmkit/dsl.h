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

#ifndef TMKIT_DSL_H_
#define TMKIT_DSL_H_

#include <string>
#include <string_view>
#include <vector>

#include "tmkit/behavior.h"
#include "tmkit/diagnostic.h"
#include "tmkit/dynamics.h"
#include "tmkit/model.h"

namespace tmkit {

// Text formats:
//   .tm   thimac blocks, `flow a.b -> c.d;`, `trigger a.b ~> c.d;`, an
//         optional `laws { ... }` block
//   .tme  `event` blocks
//   .tmb  `behavior` blocks
// docs/grammar.md has the full grammar. All parsers recover at statement
// boundaries and report every error they find, each with a span.

// PARSE_ERROR, UNKNOWN_STAGE_KIND, UNRESOLVED_PATH.
Outcome<StaticModel> parse_model(std::string_view text,
                                 std::string_view file_name);

// A file holding a single `laws { ... }` block, for overriding the table of
// an already parsed model.
Outcome<std::vector<LawRule>> parse_laws(std::string_view text,
                                         std::string_view file_name);

// PARSE_ERROR, UNRESOLVED_REGION_MEMBER, DUPLICATE_EVENT_ID.
Outcome<std::vector<EventDef>> parse_events(std::string_view text,
                                            std::string_view file_name,
                                            const StaticModel& model);

// PARSE_ERROR, UNKNOWN_EVENT_ID, EMPTY_START_SET.
Outcome<std::vector<Chronology>> parse_behaviors(
    std::string_view text, std::string_view file_name,
    const std::vector<EventDef>& events);

// As parse_behaviors, but the file must hold exactly one behavior.
Outcome<Chronology> parse_behavior(std::string_view text,
                                   std::string_view file_name,
                                   const std::vector<EventDef>& events);

// Canonical text; re-parses to an equal value. LF line endings.
std::string pretty_print(const StaticModel& model);
std::string pretty_print(const std::vector<EventDef>& events);
std::string pretty_print(const Chronology& chron);

}  // namespace tmkit

#endif  // TMKIT_DSL_H_
