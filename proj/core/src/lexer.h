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

#ifndef TMKIT_SRC_LEXER_H_
#define TMKIT_SRC_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "tmkit/diagnostic.h"

namespace tmkit::internal {

enum class TokenKind {
  kIdent,
  kString,
  kLBrace,
  kRBrace,
  kComma,
  kSemi,
  kColon,
  kDot,
  kArrow,     // ->
  kSquiggle,  // ~>
  kLess,      // <
  kEnd,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;  // identifier or decoded string literal
  int line = 1;
  int column = 1;
  int length = 0;
};

// Splits the whole input. Malformed characters and unterminated strings are
// reported as PARSE_ERROR and skipped. The last token is always kEnd,
// positioned just past the final real token.
std::vector<Token> tokenize(std::string_view text, std::string_view file_name,
                            std::vector<Diagnostic>& diagnostics);

}  // namespace tmkit::internal

#endif  // TMKIT_SRC_LEXER_H_
