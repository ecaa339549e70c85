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

#include <algorithm>
#include <initializer_list>
#include <map>
#include <set>

#include "lexer.h"
#include "tmkit/dsl.h"

namespace tmkit {
namespace {

using internal::Token;
using internal::TokenKind;

// Unwinds to the nearest statement boundary after a syntax error has been
// recorded.
struct SyntaxFailure {};

class Cursor {
 public:
  Cursor(std::string_view text, std::string_view file,
         std::vector<Diagnostic>& diagnostics)
      : file_(file), diagnostics_(diagnostics) {
    tokens_ = internal::tokenize(text, file, diagnostics);
  }

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_word(std::string_view word) const {
    return at(TokenKind::kIdent) && peek().text == word;
  }
  bool done() const { return at(TokenKind::kEnd); }
  std::size_t position() const { return pos_; }

  const Token& next() {
    const Token& token = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return token;
  }

  bool accept(TokenKind kind) {
    if (!at(kind)) return false;
    next();
    return true;
  }

  const Token& expect(TokenKind kind, std::string_view context) {
    if (!at(kind)) {
      fail(peek(), "expected " + std::string(internal::token_kind_name(kind)) +
                       " " + std::string(context) + ", found " + describe(peek()));
    }
    return next();
  }

  const Token& expect_word(std::string_view word) {
    if (!at_word(word)) {
      fail(peek(), "expected '" + std::string(word) + "', found " +
                       describe(peek()));
    }
    return next();
  }

  SourceSpan span(const Token& token) const {
    return SourceSpan{std::string(file_), token.line, token.column,
                      token.length};
  }

  SourceSpan span(const Token& first, const Token& last) const {
    SourceSpan s = span(first);
    if (last.line == first.line) s.length = last.column + last.length - first.column;
    return s;
  }

  void report(std::string_view code, const Token& at_token,
              std::string message) {
    diagnostics_.push_back(
        make_error(code, std::move(message), span(at_token)));
  }

  void report(std::string_view code, SourceSpan where, std::string message) {
    diagnostics_.push_back(make_error(code, std::move(message), std::move(where)));
  }

  [[noreturn]] void fail(const Token& at_token, std::string message) {
    report(codes::kParseError, at_token, std::move(message));
    throw SyntaxFailure{};
  }

  // Skips to the next statement boundary: just past a ';' or a complete
  // braced block, or just before an unmatched '}' or a sync keyword.
  void recover(std::size_t statement_start,
               std::initializer_list<std::string_view> sync_words) {
    if (pos_ == statement_start) next();
    int depth = 0;
    while (!done()) {
      if (depth == 0) {
        if (at(TokenKind::kRBrace)) return;
        if (at(TokenKind::kIdent) &&
            std::find(sync_words.begin(), sync_words.end(), peek().text) !=
                sync_words.end()) {
          return;
        }
      }
      const Token& token = next();
      if (token.kind == TokenKind::kSemi && depth == 0) return;
      if (token.kind == TokenKind::kLBrace) ++depth;
      if (token.kind == TokenKind::kRBrace && --depth == 0) return;
    }
  }

  static std::string describe(const Token& token) {
    switch (token.kind) {
      case TokenKind::kIdent:
        return "'" + token.text + "'";
      case TokenKind::kString:
        return "string \"" + token.text + "\"";
      default:
        return std::string(internal::token_kind_name(token.kind));
    }
  }

 private:
  std::string_view file_;
  std::vector<Diagnostic>& diagnostics_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Runs `statement` until end of input (or a closing brace when `nested`),
// recovering from syntax errors between statements.
template <typename Fn>
void statement_loop(Cursor& cur, bool nested,
                    std::initializer_list<std::string_view> sync_words,
                    Fn statement) {
  while (!cur.done() && !(nested && cur.at(TokenKind::kRBrace))) {
    const std::size_t start = cur.position();
    try {
      statement();
    } catch (const SyntaxFailure&) {
      cur.recover(start, sync_words);
    }
  }
}

// Dotted reference such as Customer.Money.release, kept as tokens until the
// whole file has been read.
struct RawRef {
  std::vector<Token> parts;
};

RawRef parse_ref(Cursor& cur, std::string_view context) {
  RawRef ref;
  ref.parts.push_back(cur.expect(TokenKind::kIdent, context));
  while (cur.accept(TokenKind::kDot)) {
    ref.parts.push_back(cur.expect(TokenKind::kIdent, "after '.'"));
  }
  if (ref.parts.size() < 2) {
    cur.fail(ref.parts.front(),
             "stage reference '" + ref.parts.front().text +
                 "' needs a thimac path and a stage kind");
  }
  return ref;
}

// Resolves against the model, reporting `missing_code` for paths or stages
// that do not exist.
std::optional<StageRef> resolve_ref(Cursor& cur, const RawRef& raw,
                                    const StaticModel& model,
                                    std::string_view missing_code) {
  const Token& kind_token = raw.parts.back();
  const SourceSpan where = cur.span(raw.parts.front(), kind_token);
  StageRef ref;
  for (std::size_t i = 0; i + 1 < raw.parts.size(); ++i) {
    ref.path.push_back(raw.parts[i].text);
  }
  const auto kind = parse_stage_kind(kind_token.text);
  if (!kind) {
    cur.report(codes::kUnknownStageKind, kind_token,
               "'" + kind_token.text + "' is not a stage kind");
    return std::nullopt;
  }
  ref.kind = *kind;
  const Thimac* thimac = model.find(ref.path);
  if (thimac == nullptr) {
    cur.report(missing_code, where,
               "no thimac at path '" + ref.thimac_path() + "'");
    return std::nullopt;
  }
  if (!thimac->stages.contains(*kind)) {
    cur.report(missing_code, where,
               "thimac '" + ref.thimac_path() + "' has no " +
                   std::string(stage_kind_name(*kind)) + " stage");
    return std::nullopt;
  }
  return ref;
}

StageKind expect_stage_kind(Cursor& cur) {
  const Token& token = cur.expect(TokenKind::kIdent, "naming a stage kind");
  const auto kind = parse_stage_kind(token.text);
  if (!kind) {
    cur.report(codes::kUnknownStageKind, token,
               "'" + token.text + "' is not a stage kind");
    throw SyntaxFailure{};
  }
  return *kind;
}

void parse_law_block(Cursor& cur, std::vector<LawRule>& rules) {
  cur.expect_word("laws");
  cur.expect(TokenKind::kLBrace, "after 'laws'");
  statement_loop(cur, true, {"allow", "deny"}, [&] {
    LawRule rule;
    const Token& verb = cur.peek();
    if (verb.kind != TokenKind::kIdent ||
        (verb.text != "allow" && verb.text != "deny")) {
      cur.fail(verb, "expected 'allow' or 'deny', found " +
                         Cursor::describe(verb));
    }
    rule.allow = cur.next().text == "allow";
    rule.span = cur.span(verb);
    if (cur.at_word("crossing")) {
      cur.next();
      rule.crossing = true;
    }
    rule.from = expect_stage_kind(cur);
    cur.expect(TokenKind::kArrow, "between stage kinds");
    const Token& target = cur.peek();
    rule.to = expect_stage_kind(cur);
    cur.expect(TokenKind::kSemi, "after law rule");
    if (rule.allow && rule.to == StageKind::kCreate) {
      cur.report(codes::kParseError, target,
                 "create cannot be the target of a flow law");
      return;
    }
    rules.push_back(rule);
  });
  cur.expect(TokenKind::kRBrace, "closing 'laws'");
}

class ModelParser {
 public:
  ModelParser(std::string_view text, std::string_view file)
      : cur_(text, file, diagnostics_) {}

  Outcome<StaticModel> run() {
    statement_loop(cur_, false, {"thimac", "flow", "trigger", "laws"}, [&] {
      if (cur_.at_word("thimac")) {
        model_.roots.push_back(parse_thimac());
      } else if (cur_.at_word("flow")) {
        parse_arc(ArcKind::kFlow);
      } else if (cur_.at_word("trigger")) {
        parse_arc(ArcKind::kTrigger);
      } else if (cur_.at_word("laws")) {
        parse_law_block(cur_, rules_);
      } else {
        cur_.fail(cur_.peek(),
                  "expected 'thimac', 'flow', 'trigger' or 'laws', found " +
                      Cursor::describe(cur_.peek()));
      }
    });
    apply_law_rules(model_.laws, rules_);

    for (auto& pending : pending_arcs_) {
      auto source =
          resolve_ref(cur_, pending.source, model_, codes::kUnresolvedPath);
      auto target =
          resolve_ref(cur_, pending.target, model_, codes::kUnresolvedPath);
      if (source && target) {
        pending.arc.source = std::move(*source);
        pending.arc.target = std::move(*target);
        model_.arcs.push_back(std::move(pending.arc));
      }
    }

    Outcome<StaticModel> out;
    out.diagnostics = std::move(diagnostics_);
    if (!has_errors(out.diagnostics)) out.value = std::move(model_);
    return out;
  }

 private:
  struct PendingArc {
    Arc arc;
    RawRef source;
    RawRef target;
  };

  Thimac parse_thimac() {
    const Token& keyword = cur_.expect_word("thimac");
    Thimac thimac;
    const Token& id = cur_.expect(TokenKind::kIdent, "naming the thimac");
    thimac.id = id.text;
    thimac.span = cur_.span(keyword, id);
    if (cur_.at(TokenKind::kString)) thimac.name = cur_.next().text;
    cur_.expect(TokenKind::kLBrace, "opening thimac '" + thimac.id + "'");
    statement_loop(cur_, true, {"stages", "thimac"}, [&] {
      if (cur_.at_word("stages")) {
        cur_.next();
        do {
          const Token& token = cur_.peek();
          const StageKind kind = expect_stage_kind(cur_);
          if (!thimac.stages.insert(kind).second) {
            cur_.report(codes::kParseError, token,
                        "stage '" + token.text + "' is listed twice for '" +
                            thimac.id + "'");
          }
        } while (cur_.accept(TokenKind::kComma));
        cur_.accept(TokenKind::kSemi);
      } else if (cur_.at_word("thimac")) {
        thimac.children.push_back(parse_thimac());
      } else {
        cur_.fail(cur_.peek(), "expected 'stages' or 'thimac', found " +
                                   Cursor::describe(cur_.peek()));
      }
    });
    cur_.expect(TokenKind::kRBrace, "closing thimac '" + thimac.id + "'");
    return thimac;
  }

  void parse_arc(ArcKind kind) {
    const Token& keyword = cur_.next();
    PendingArc pending;
    pending.arc.kind = kind;
    if (cur_.at(TokenKind::kIdent) && cur_.peek(1).kind == TokenKind::kColon) {
      pending.arc.id = cur_.next().text;
      cur_.next();
    }
    pending.source = parse_ref(cur_, "as arc source");
    cur_.expect(kind == ArcKind::kFlow ? TokenKind::kArrow
                                       : TokenKind::kSquiggle,
                kind == ArcKind::kFlow ? "in flow" : "in trigger");
    pending.target = parse_ref(cur_, "as arc target");
    const Token& semi = cur_.expect(TokenKind::kSemi, "ending the arc");
    pending.arc.span = cur_.span(keyword, semi);
    if (pending.arc.id.empty()) {
      pending.arc.id = default_arc_id(arc_count_);
    }
    ++arc_count_;
    pending_arcs_.push_back(std::move(pending));
  }

  std::vector<Diagnostic> diagnostics_;
  Cursor cur_;
  StaticModel model_;
  std::vector<LawRule> rules_;
  std::vector<PendingArc> pending_arcs_;
  std::size_t arc_count_ = 0;
};

// Comma-separated list that may be empty (terminated by ';').
template <typename Fn>
void parse_list(Cursor& cur, Fn item) {
  if (cur.at(TokenKind::kSemi)) {
    cur.next();
    return;
  }
  do {
    item();
  } while (cur.accept(TokenKind::kComma));
  cur.expect(TokenKind::kSemi, "ending the list");
}

}  // namespace

Outcome<StaticModel> parse_model(std::string_view text,
                                 std::string_view file_name) {
  return ModelParser(text, file_name).run();
}

Outcome<std::vector<LawRule>> parse_laws(std::string_view text,
                                         std::string_view file_name) {
  std::vector<Diagnostic> diagnostics;
  Cursor cur(text, file_name, diagnostics);
  std::vector<LawRule> rules;
  statement_loop(cur, false, {"laws"}, [&] {
    if (!cur.at_word("laws")) {
      cur.fail(cur.peek(),
               "expected 'laws', found " + Cursor::describe(cur.peek()));
    }
    parse_law_block(cur, rules);
  });
  Outcome<std::vector<LawRule>> out;
  out.diagnostics = std::move(diagnostics);
  if (!has_errors(out.diagnostics)) out.value = std::move(rules);
  return out;
}

Outcome<std::vector<EventDef>> parse_events(std::string_view text,
                                            std::string_view file_name,
                                            const StaticModel& model) {
  std::vector<Diagnostic> diagnostics;
  Cursor cur(text, file_name, diagnostics);
  std::vector<EventDef> events;
  std::set<EventId> seen;

  statement_loop(cur, false, {"event"}, [&] {
    const Token& keyword = cur.expect_word("event");
    const Token& id = cur.expect(TokenKind::kIdent, "naming the event");
    EventDef event;
    event.id = id.text;
    event.span = cur.span(keyword, id);
    if (cur.at(TokenKind::kString)) event.name = cur.next().text;
    cur.expect(TokenKind::kLBrace, "opening event '" + event.id + "'");
    statement_loop(cur, true, {"region", "time"}, [&] {
      if (cur.at_word("region")) {
        cur.next();
        cur.expect(TokenKind::kColon, "after 'region'");
        parse_list(cur, [&] {
          const RawRef raw = parse_ref(cur, "in region");
          if (auto ref = resolve_ref(cur, raw, model,
                                     codes::kUnresolvedRegionMember)) {
            event.region.insert(std::move(*ref));
          }
        });
      } else if (cur.at_word("time")) {
        const Token& word = cur.next();
        cur.expect(TokenKind::kColon, "after 'time'");
        const Token& label = cur.expect(TokenKind::kString, "as time label");
        cur.expect(TokenKind::kSemi, "after time label");
        if (event.time_label) {
          cur.report(codes::kParseError, word,
                     "event '" + event.id + "' has two time labels");
        }
        event.time_label = label.text;
      } else {
        cur.fail(cur.peek(), "expected 'region' or 'time', found " +
                                 Cursor::describe(cur.peek()));
      }
    });
    cur.expect(TokenKind::kRBrace, "closing event '" + event.id + "'");
    if (!seen.insert(event.id).second) {
      cur.report(codes::kDuplicateEventId, id,
                 "event id '" + event.id + "' is declared twice");
      return;
    }
    events.push_back(std::move(event));
  });

  Outcome<std::vector<EventDef>> out;
  out.diagnostics = std::move(diagnostics);
  if (!has_errors(out.diagnostics)) out.value = std::move(events);
  return out;
}

Outcome<std::vector<Chronology>> parse_behaviors(
    std::string_view text, std::string_view file_name,
    const std::vector<EventDef>& events) {
  std::vector<Diagnostic> diagnostics;
  Cursor cur(text, file_name, diagnostics);
  std::set<EventId> declared;
  for (const auto& e : events) declared.insert(e.id);
  std::vector<Chronology> behaviors;

  statement_loop(cur, false, {"behavior"}, [&] {
    const Token& keyword = cur.expect_word("behavior");
    const Token& name = cur.expect(TokenKind::kIdent, "naming the behavior");
    Chronology chron;
    chron.name = name.text;
    chron.span = cur.span(keyword, name);
    bool explicit_nodes = false;
    cur.expect(TokenKind::kLBrace, "opening behavior '" + chron.name + "'");

    auto event_id = [&]() -> std::optional<EventId> {
      const Token& token = cur.expect(TokenKind::kIdent, "naming an event");
      if (!declared.contains(token.text)) {
        cur.report(codes::kUnknownEventId, token,
                   "no event named '" + token.text + "'");
        return std::nullopt;
      }
      return token.text;
    };
    auto id_list = [&](std::set<EventId>& into) {
      parse_list(cur, [&] {
        if (auto id = event_id()) into.insert(*id);
      });
    };
    auto pair_list = [&](std::set<EventPair>& into, TokenKind separator,
                         std::string_view what) {
      parse_list(cur, [&] {
        auto a = event_id();
        cur.expect(separator, what);
        auto b = event_id();
        if (a && b) into.emplace(*a, *b);
      });
    };

    statement_loop(
        cur, true, {"nodes", "start", "final", "edges", "require"}, [&] {
          const Token& word = cur.expect(TokenKind::kIdent, "in behavior");
          cur.expect(TokenKind::kColon, "after '" + word.text + "'");
          if (word.text == "nodes") {
            explicit_nodes = true;
            id_list(chron.nodes);
          } else if (word.text == "start") {
            chron.graph = true;
            id_list(chron.starts);
          } else if (word.text == "final") {
            chron.graph = true;
            if (!chron.finals) chron.finals.emplace();
            id_list(*chron.finals);
          } else if (word.text == "edges") {
            chron.graph = true;
            pair_list(chron.edges, TokenKind::kArrow, "between edge events");
          } else if (word.text == "require") {
            chron.poset = true;
            pair_list(chron.constraints, TokenKind::kLess,
                      "between constrained events");
          } else {
            cur.fail(word,
                     "expected 'nodes', 'start', 'final', 'edges' or "
                     "'require', found '" + word.text + "'");
          }
        });
    const Token& close =
        cur.expect(TokenKind::kRBrace, "closing behavior '" + chron.name + "'");

    if (!chron.graph && !chron.poset) {
      cur.report(codes::kParseError, close,
                 "behavior '" + chron.name +
                     "' declares neither start/edges nor require");
      return;
    }
    if (chron.graph && chron.starts.empty()) {
      cur.report(codes::kEmptyStartSet, name,
                 "behavior '" + chron.name + "' has no start event");
      return;
    }
    if (!explicit_nodes) chron.nodes = declared;
    for (const Diagnostic& d : check_well_formed(chron)) {
      cur.report(d.code, name, d.message);
    }
    behaviors.push_back(std::move(chron));
  });

  Outcome<std::vector<Chronology>> out;
  out.diagnostics = std::move(diagnostics);
  if (!has_errors(out.diagnostics)) out.value = std::move(behaviors);
  return out;
}

Outcome<Chronology> parse_behavior(std::string_view text,
                                   std::string_view file_name,
                                   const std::vector<EventDef>& events) {
  auto all = parse_behaviors(text, file_name, events);
  Outcome<Chronology> out;
  out.diagnostics = std::move(all.diagnostics);
  if (!all.ok()) return out;
  if (all->size() != 1) {
    out.diagnostics.push_back(make_error(
        codes::kParseError,
        "expected exactly one behavior, found " + std::to_string(all->size()),
        SourceSpan{std::string(file_name), 1, 1, 0}));
    return out;
  }
  out.value = std::move(all.value->front());
  return out;
}

}  // namespace tmkit
