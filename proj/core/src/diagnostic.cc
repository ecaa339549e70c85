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

#include "tmkit/diagnostic.h"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace tmkit {

std::string_view severity_name(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

Diagnostic make_error(std::string_view code, std::string message,
                      std::optional<SourceSpan> span) {
  return Diagnostic{Severity::kError, std::string(code), std::move(message),
                    std::move(span)};
}

Diagnostic make_warning(std::string_view code, std::string message,
                        std::optional<SourceSpan> span) {
  return Diagnostic{Severity::kWarning, std::string(code), std::move(message),
                    std::move(span)};
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     if (a.code != b.code) return a.code < b.code;
                     if (a.span.has_value() != b.span.has_value()) {
                       return a.span.has_value();
                     }
                     if (a.span && *a.span != *b.span) return *a.span < *b.span;
                     return a.message < b.message;
                   });
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Severity::kError;
                     });
}

std::string format_diagnostic(const Diagnostic& diagnostic) {
  std::ostringstream out;
  out << severity_name(diagnostic.severity) << ' ' << diagnostic.code << ' ';
  if (diagnostic.span) {
    out << diagnostic.span->file << ':' << diagnostic.span->line << ':'
        << diagnostic.span->column;
  } else {
    out << '-';
  }
  out << ' ' << diagnostic.message;
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Diagnostic& diagnostic) {
  return os << format_diagnostic(diagnostic);
}

}  // namespace tmkit
