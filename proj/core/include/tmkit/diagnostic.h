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

#ifndef TMKIT_DIAGNOSTIC_H_
#define TMKIT_DIAGNOSTIC_H_

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tmkit {

// Location of a token in an input file. Line and column are 1-based.
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
  int length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
  friend auto operator<=>(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { kError, kWarning };

std::string_view severity_name(Severity severity);

// Stable diagnostic codes. The string values are part of the CLI output
// contract; see docs/diagnostics.md before renaming anything here.
namespace codes {
inline constexpr std::string_view kParseError = "PARSE_ERROR";
inline constexpr std::string_view kUnknownStageKind = "UNKNOWN_STAGE_KIND";
inline constexpr std::string_view kUnresolvedPath = "UNRESOLVED_PATH";
inline constexpr std::string_view kIllegalSuccession = "ILLEGAL_SUCCESSION";
inline constexpr std::string_view kIllegalCrossing = "ILLEGAL_CROSSING";
inline constexpr std::string_view kCreateInflow = "CREATE_INFLOW";
inline constexpr std::string_view kDanglingRef = "DANGLING_REF";
inline constexpr std::string_view kDuplicateId = "DUPLICATE_ID";
inline constexpr std::string_view kSelfTrigger = "SELF_TRIGGER";
inline constexpr std::string_view kEmptyRegion = "EMPTY_REGION";
inline constexpr std::string_view kUnresolvedRegionMember =
    "UNRESOLVED_REGION_MEMBER";
inline constexpr std::string_view kDisconnectedRegion = "DISCONNECTED_REGION";
inline constexpr std::string_view kOverlappingRegions = "OVERLAPPING_REGIONS";
inline constexpr std::string_view kDuplicateEventId = "DUPLICATE_EVENT_ID";
inline constexpr std::string_view kUnknownEventId = "UNKNOWN_EVENT_ID";
inline constexpr std::string_view kEmptyStartSet = "EMPTY_START_SET";
inline constexpr std::string_view kMalformedChronology = "MALFORMED_CHRONOLOGY";
inline constexpr std::string_view kPrecedenceViolation = "PRECEDENCE_VIOLATION";
inline constexpr std::string_view kMissingConstraint = "MISSING_CONSTRAINT";
inline constexpr std::string_view kUncoveredEvent = "UNCOVERED_EVENT";
}  // namespace codes

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  std::optional<SourceSpan> span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

Diagnostic make_error(std::string_view code, std::string message,
                      std::optional<SourceSpan> span = std::nullopt);
Diagnostic make_warning(std::string_view code, std::string message,
                        std::optional<SourceSpan> span = std::nullopt);

// Orders by code, then span, then message. Diagnostics without a span sort
// after those with one for the same code.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

// "severity code file:line:col message"; "-" stands in for a missing span.
std::string format_diagnostic(const Diagnostic& diagnostic);

std::ostream& operator<<(std::ostream& os, const Diagnostic& diagnostic);

// Either a value or the diagnostics explaining why there is none. Warnings
// may accompany a value.
template <typename T>
struct Outcome {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

// Thrown when an operation is called outside its contract (empty trace,
// missing render input, mode mismatch).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an enumeration would exceed its documented size bound.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace tmkit

#endif  // TMKIT_DIAGNOSTIC_H_
