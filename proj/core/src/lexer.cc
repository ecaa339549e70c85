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

#include "lexer.h"

#include <cctype>

namespace tmkit::internal {
namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string_view file,
        std::vector<Diagnostic>& diagnostics)
      : text_(text), file_(file), diagnostics_(diagnostics) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    int end_line = 1;
    int end_column = 1;
    while (true) {
      skip_blanks();
      if (pos_ >= text_.size()) break;
      Token token;
      if (lex(token)) {
        end_line = line_;
        end_column = column_;
        tokens.push_back(std::move(token));
      }
    }
    tokens.push_back(Token{TokenKind::kEnd, "", end_line, end_column, 0});
    return tokens;
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  // Columns count characters, so UTF-8 continuation bytes do not advance.
  void advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
  }

  void skip_blanks() {
    while (pos_ < text_.size()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void error(std::string message, int line, int column, int length) {
    diagnostics_.push_back(
        make_error(codes::kParseError, std::move(message),
                   SourceSpan{std::string(file_), line, column, length}));
  }

  bool lex(Token& token) {
    token.line = line_;
    token.column = column_;
    const char c = peek();
    if (ident_start(c)) {
      token.kind = TokenKind::kIdent;
      while (pos_ < text_.size() && ident_char(peek())) {
        token.text += peek();
        advance();
      }
    } else if (c == '"') {
      return lex_string(token);
    } else {
      static constexpr struct {
        std::string_view spelling;
        TokenKind kind;
      } kPunctuation[] = {
          {"->", TokenKind::kArrow}, {"~>", TokenKind::kSquiggle},
          {"{", TokenKind::kLBrace}, {"}", TokenKind::kRBrace},
          {",", TokenKind::kComma},  {";", TokenKind::kSemi},
          {":", TokenKind::kColon},  {".", TokenKind::kDot},
          {"<", TokenKind::kLess},
      };
      for (const auto& p : kPunctuation) {
        if (text_.substr(pos_, p.spelling.size()) == p.spelling) {
          token.kind = p.kind;
          token.text = std::string(p.spelling);
          for (std::size_t i = 0; i < p.spelling.size(); ++i) advance();
          token.length = static_cast<int>(p.spelling.size());
          return true;
        }
      }
      std::string shown(1, c);
      if (!std::isprint(static_cast<unsigned char>(c))) {
        shown = "byte " + std::to_string(static_cast<unsigned char>(c));
      }
      error("unexpected character '" + shown + "'", line_, column_, 1);
      advance();
      // Swallow the rest of a multi-byte sequence.
      while (pos_ < text_.size() &&
             (static_cast<unsigned char>(peek()) & 0xC0) == 0x80) {
        advance();
      }
      return false;
    }
    token.length = column_ - token.column;
    return true;
  }

  bool lex_string(Token& token) {
    token.kind = TokenKind::kString;
    advance();  // opening quote
    while (true) {
      if (pos_ >= text_.size() || peek() == '\n') {
        error("unterminated string literal", token.line, token.column,
              column_ - token.column);
        return false;
      }
      const char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        const char next = peek(1);
        const char decoded = next == 'n'    ? '\n'
                             : next == 't'  ? '\t'
                             : next == '"'  ? '"'
                             : next == '\\' ? '\\'
                                            : '\0';
        if (decoded == '\0') {
          error("unknown escape sequence in string", line_, column_, 2);
          advance();
          continue;
        }
        token.text += decoded;
        advance();
        advance();
        continue;
      }
      token.text += c;
      advance();
    }
    token.length = column_ - token.column;
    return true;
  }

  std::string_view text_;
  std::string_view file_;
  std::vector<Diagnostic>& diagnostics_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent:
      return "identifier";
    case TokenKind::kString:
      return "string";
    case TokenKind::kLBrace:
      return "'{'";
    case TokenKind::kRBrace:
      return "'}'";
    case TokenKind::kComma:
      return "','";
    case TokenKind::kSemi:
      return "';'";
    case TokenKind::kColon:
      return "':'";
    case TokenKind::kDot:
      return "'.'";
    case TokenKind::kArrow:
      return "'->'";
    case TokenKind::kSquiggle:
      return "'~>'";
    case TokenKind::kLess:
      return "'<'";
    case TokenKind::kEnd:
      return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text, std::string_view file_name,
                            std::vector<Diagnostic>& diagnostics) {
  return Lexer(text, file_name, diagnostics).run();
}

}  // namespace tmkit::internal
