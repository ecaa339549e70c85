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


#include "tmkit/dsl.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "testing.h"

namespace tmkit {
namespace {

using K = StageKind;

std::vector<std::string> codes_of(const std::vector<Diagnostic>& list) {
  std::vector<std::string> out;
  for (const auto& d : list) out.push_back(d.code);
  return out;
}

constexpr char kShop[] = R"(# A customer pays at a shop.
thimac Customer "the customer" {
  stages create
  thimac Money "cash" {
    stages release, transfer
  }
}
thimac Shop {
  stages transfer, receive, PROCESS;
}
flow Customer.Money.release -> Customer.Money.transfer;
flow pay: Customer.Money.transfer -> Shop.transfer;
flow Shop.transfer -> Shop.receive;
trigger Shop.receive ~> Customer.create;
)";

TEST(ParseModelTest, ReadsThimacsAndArcs) {
  const auto outcome = parse_model(kShop, "shop.tm");
  ASSERT_TRUE(outcome.ok());
  EXPECT_TRUE(outcome.diagnostics.empty());
  const StaticModel& model = *outcome;
  ASSERT_EQ(model.roots.size(), 2u);
  EXPECT_EQ(model.roots[0].name, "the customer");
  EXPECT_EQ(model.roots[0].children[0].stages,
            (std::set<K>{K::kRelease, K::kTransfer}));
  EXPECT_EQ(model.roots[1].stages,
            (std::set<K>{K::kTransfer, K::kReceive, K::kProcess}));
  EXPECT_EQ(model.thimac_count(), 3u);

  ASSERT_EQ(model.arcs.size(), 4u);
  EXPECT_EQ(model.arcs[0].id, "arc1");
  EXPECT_EQ(model.arcs[1].id, "pay");
  EXPECT_EQ(model.arcs[2].id, "arc3");
  EXPECT_EQ(model.arcs[3].kind, ArcKind::kTrigger);
  EXPECT_EQ(model.arcs[1].source.id(), "Customer.Money.transfer");
  EXPECT_EQ(model.laws, LawTable::defaults());
}

TEST(ParseModelTest, Spans) {
  const auto outcome = parse_model(kShop, "shop.tm");
  ASSERT_TRUE(outcome.ok());
  const auto& money = outcome->roots[0].children[0];
  ASSERT_TRUE(money.span.has_value());
  EXPECT_EQ(*money.span, (SourceSpan{"shop.tm", 4, 3, 12}));
  ASSERT_TRUE(outcome->arcs[1].span.has_value());
  EXPECT_EQ(outcome->arcs[1].span->line, 12);
  EXPECT_EQ(outcome->arcs[1].span->column, 1);
}

TEST(ParseModelTest, CrlfAndCommentsChangeNothing) {
  std::string crlf;
  for (char c : std::string(kShop)) {
    if (c == '\n') crlf += '\r';
    crlf += c;
  }
  const auto plain = parse_model(kShop, "shop.tm");
  const auto windows = parse_model(crlf, "shop.tm");
  ASSERT_TRUE(windows.ok());
  EXPECT_EQ(*windows, *plain);
  EXPECT_EQ(windows->arcs[1].span, plain->arcs[1].span);

  const auto bare = parse_model(
      "thimac Customer \"the customer\" { stages create thimac Money "
      "\"cash\" { stages release, transfer } } thimac Shop { stages "
      "transfer, receive, process } flow Customer.Money.release -> "
      "Customer.Money.transfer; flow pay: Customer.Money.transfer -> "
      "Shop.transfer; flow Shop.transfer -> Shop.receive; trigger "
      "Shop.receive ~> Customer.create; # trailing",
      "bare.tm");
  ASSERT_TRUE(bare.ok());
  EXPECT_EQ(*bare, *plain);
}

TEST(ParseModelTest, StringEscapes) {
  const auto outcome =
      parse_model(R"(thimac A "say \"hi\"\n\tback\\slash" { })", "a.tm");
  ASSERT_TRUE(outcome.ok());
  EXPECT_EQ(outcome->roots[0].name, "say \"hi\"\n\tback\\slash");
  const auto again = parse_model(pretty_print(*outcome), "again.tm");
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(*again, *outcome);
}

TEST(ParseModelTest, LawBlock) {
  const auto outcome = parse_model(
      "laws { allow process -> transfer; deny crossing transfer -> transfer;"
      " allow crossing release -> receive; }\n"
      "thimac A { stages process }",
      "laws.tm");
  ASSERT_TRUE(outcome.ok());
  EXPECT_TRUE(outcome->laws.allows_succession(K::kProcess, K::kTransfer));
  EXPECT_FALSE(outcome->laws.allows_crossing(K::kTransfer, K::kTransfer));
  EXPECT_TRUE(outcome->laws.allows_crossing(K::kRelease, K::kReceive));
}

TEST(ParseModelTest, AllowingCreateAsTargetIsAnError) {
  const auto outcome =
      parse_model("laws { allow release -> create; }", "laws.tm");
  EXPECT_FALSE(outcome.ok());
  EXPECT_EQ(codes_of(outcome.diagnostics),
            (std::vector<std::string>{"PARSE_ERROR"}));
  EXPECT_TRUE(parse_model("laws { deny release -> create; }", "x").ok());
}

TEST(ParseModelTest, ErrorPositions) {
  const auto outcome = parse_model(
      "thimac A { stages create }\n"
      "flow A.create -> A.create\n",
      "bad.tm");
  EXPECT_FALSE(outcome.ok());
  ASSERT_EQ(outcome.diagnostics.size(), 1u);
  const Diagnostic& d = outcome.diagnostics[0];
  EXPECT_EQ(d.code, "PARSE_ERROR");
  ASSERT_TRUE(d.span.has_value());
  EXPECT_EQ(d.span->file, "bad.tm");
  EXPECT_EQ(d.span->line, 2);
}

TEST(ParseModelTest, RecoversAndReportsEveryStatement) {
  const auto outcome = parse_model(
      "thimac A { stages create, boil }\n"
      "thimac B { stages transfer }\n"
      "flow A.create -> ;\n"
      "flow A.create -> Nowhere.transfer;\n"
      "flow A.create -> B.receive;\n"
      "thimac C { stages process, process }\n"
      "flow A.create B.transfer;\n",
      "many.tm");
  EXPECT_FALSE(outcome.ok());
  EXPECT_EQ(codes_of(outcome.diagnostics),
            (std::vector<std::string>{"UNKNOWN_STAGE_KIND", "PARSE_ERROR",
                                      "PARSE_ERROR", "PARSE_ERROR",
                                      "UNRESOLVED_PATH", "UNRESOLVED_PATH"}));
}

TEST(ParseModelTest, StrayClosingBrace) {
  const auto outcome = parse_model("} thimac A { stages create }", "x.tm");
  EXPECT_FALSE(outcome.ok());
  ASSERT_EQ(outcome.diagnostics.size(), 1u);
  EXPECT_EQ(outcome.diagnostics[0].span->column, 1);
}

TEST(ParseLawsTest, OverrideFile) {
  const auto rules = parse_laws(
      "# stricter\nlaws { deny create -> process; }\n"
      "laws { allow crossing release -> transfer; }\n",
      "strict.laws");
  ASSERT_TRUE(rules.ok());
  ASSERT_EQ(rules->size(), 2u);
  EXPECT_EQ((*rules)[0], (LawRule{false, false, K::kCreate, K::kProcess, {}}));
  EXPECT_EQ((*rules)[1], (LawRule{true, true, K::kRelease, K::kTransfer, {}}));
  EXPECT_FALSE(parse_laws("thimac A {}", "x.laws").ok());
}

StaticModel shop() { return *parse_model(kShop, "shop.tm"); }

TEST(ParseEventsTest, ReadsRegionsAndTimes) {
  const auto events = parse_events(
      "event Pay \"pay the bill\" {\n"
      "  region: Customer.Money.release, Customer.Money.transfer;\n"
      "  time: \"after dinner\";\n"
      "}\n"
      "event Take { region: Shop.transfer, Shop.receive; }\n",
      "shop.tme", shop());
  ASSERT_TRUE(events.ok());
  ASSERT_EQ(events->size(), 2u);
  EXPECT_EQ((*events)[0].name, "pay the bill");
  EXPECT_EQ((*events)[0].time_label, "after dinner");
  EXPECT_EQ((*events)[0].region.size(), 2u);
  EXPECT_FALSE((*events)[1].time_label.has_value());
}

TEST(ParseEventsTest, Errors) {
  const auto events = parse_events(
      "event A { region: Shop.create; }\n"
      "event B { region: Shop.receive; time: \"x\"; time: \"y\"; }\n"
      "event B { region: Shop.receive; }\n",
      "bad.tme", shop());
  EXPECT_FALSE(events.ok());
  EXPECT_EQ(codes_of(events.diagnostics),
            (std::vector<std::string>{"UNRESOLVED_REGION_MEMBER",
                                      "PARSE_ERROR", "DUPLICATE_EVENT_ID"}));
}

std::vector<EventDef> shop_events() {
  return *parse_events(
      "event Pay { region: Customer.Money.release; }\n"
      "event Take { region: Shop.transfer; }\n"
      "event Use { region: Shop.process; }\n",
      "shop.tme", shop());
}

TEST(ParseBehaviorsTest, GraphAndPoset) {
  const auto all = parse_behaviors(
      "behavior G { start: Pay; final: Use; edges: Pay -> Take, Take -> Use; }"
      "behavior P { require: Pay < Use; }"
      "behavior M { nodes: Pay, Use; start: Pay; edges: Pay -> Use;"
      " require: Pay < Use; }",
      "shop.tmb", shop_events());
  ASSERT_TRUE(all.ok());
  ASSERT_EQ(all->size(), 3u);
  const Chronology& g = (*all)[0];
  EXPECT_EQ(g.mode(), BehaviorMode::kGraph);
  EXPECT_EQ(g.nodes, (std::set<EventId>{"Pay", "Take", "Use"}));
  EXPECT_EQ(g.finals, (std::set<EventId>{"Use"}));
  EXPECT_EQ((*all)[1].mode(), BehaviorMode::kPoset);
  EXPECT_TRUE((*all)[1].starts.empty());
  EXPECT_EQ((*all)[2].mode(), BehaviorMode::kMixed);
  EXPECT_EQ((*all)[2].nodes.size(), 2u);
}

TEST(ParseBehaviorsTest, Errors) {
  const auto events = shop_events();
  EXPECT_EQ(codes_of(parse_behaviors("behavior X { start: Eat; }", "x",
                                     events)
                         .diagnostics),
            (std::vector<std::string>{"UNKNOWN_EVENT_ID", "EMPTY_START_SET"}));
  EXPECT_EQ(codes_of(parse_behaviors("behavior X { edges: Pay -> Use; }", "x",
                                     events)
                         .diagnostics),
            (std::vector<std::string>{"EMPTY_START_SET"}));
  EXPECT_EQ(codes_of(parse_behaviors("behavior X { nodes: Pay; }", "x",
                                     events)
                         .diagnostics),
            (std::vector<std::string>{"PARSE_ERROR"}));
  EXPECT_EQ(codes_of(parse_behaviors(
                         "behavior X { nodes: Pay; start: Pay; final: Use; }",
                         "x", events)
                         .diagnostics),
            (std::vector<std::string>{"MALFORMED_CHRONOLOGY"}));
}

TEST(ParseBehaviorsTest, ExactlyOne) {
  const auto events = shop_events();
  EXPECT_TRUE(parse_behavior("behavior A { start: Pay; }", "x", events).ok());
  EXPECT_FALSE(parse_behavior("", "x", events).ok());
  EXPECT_FALSE(parse_behavior(
                   "behavior A { start: Pay; } behavior B { start: Use; }",
                   "x", events)
                   .ok());
}

// Every corpus file survives parse, print, parse, and printing is a fixed
// point after the first pass.
TEST(RoundTripTest, Corpus) {
  for (const auto& entry : testing::corpus()) {
    for (const auto& file : entry.behaviors) {
      const auto f = testing::load_fixture(entry.model, entry.events, file);
      const std::string model_text = pretty_print(f.model);
      const auto model = parse_model(model_text, "printed.tm");
      ASSERT_TRUE(model.ok()) << model_text;
      EXPECT_EQ(*model, f.model);
      EXPECT_EQ(pretty_print(*model), model_text);

      const std::string event_text = pretty_print(f.events);
      const auto events = parse_events(event_text, "printed.tme", *model);
      ASSERT_TRUE(events.ok()) << event_text;
      EXPECT_EQ(*events, f.events);
      EXPECT_EQ(pretty_print(*events), event_text);

      for (const auto& chron : f.behaviors) {
        const std::string text = pretty_print(chron);
        const auto again = parse_behavior(text, "printed.tmb", *events);
        ASSERT_TRUE(again.ok()) << text;
        EXPECT_EQ(*again, chron);
        EXPECT_EQ(pretty_print(*again), text);
      }
    }
  }
}

// Random well-formed inputs built in code, with awkward names and law
// overrides, also survive the round trip.
class RandomModels {
 public:
  explicit RandomModels(unsigned seed) : rng_(seed) {}

  StaticModel model() {
    StaticModel m;
    const int roots = uniform(1, 3);
    for (int i = 0; i < roots; ++i) m.roots.push_back(thimac(0, i));
    const auto stages = m.stages();
    if (!stages.empty()) {
      const int arcs = uniform(0, 6);
      for (int i = 0; i < arcs; ++i) {
        Arc arc;
        arc.kind = coin() ? ArcKind::kFlow : ArcKind::kTrigger;
        arc.source = pick(stages);
        arc.target = pick(stages);
        arc.id = coin() ? default_arc_id(m.arcs.size())
                        : "a" + std::to_string(uniform(0, 99));
        m.arcs.push_back(arc);
      }
    }
    for (int i = uniform(0, 2); i > 0; --i) {
      const K from = kAllStageKinds[uniform(0, 4)];
      const K to = kAllStageKinds[uniform(1, 4)];
      if (coin()) {
        coin() ? m.laws.deny_crossing(from, to)
               : (void)m.laws.allow_crossing(from, to);
      } else {
        coin() ? m.laws.deny_succession(from, to)
               : (void)m.laws.allow_succession(from, to);
      }
    }
    return m;
  }

  std::vector<EventDef> events(const StaticModel& m) {
    const auto stages = m.stages();
    std::vector<EventDef> out;
    const int n = uniform(1, 5);
    for (int i = 0; i < n; ++i) {
      EventDef e;
      e.id = "E" + std::to_string(i + 1);
      if (coin()) e.name = text();
      for (int j = uniform(0, 3); j > 0 && !stages.empty(); --j) {
        e.region.insert(pick(stages));
      }
      if (coin()) e.time_label = text();
      out.push_back(e);
    }
    return out;
  }

  Chronology chronology(const std::vector<EventDef>& events) {
    std::vector<EventId> ids;
    for (const auto& e : events) ids.push_back(e.id);
    Chronology c;
    c.name = "B" + std::to_string(uniform(0, 9));
    for (const auto& id : ids) {
      if (coin()) c.nodes.insert(id);
    }
    if (c.nodes.empty()) c.nodes.insert(ids.front());
    const std::vector<EventId> nodes(c.nodes.begin(), c.nodes.end());
    const int mode = uniform(0, 2);
    c.graph = mode != 1;
    c.poset = mode != 0;
    if (c.graph) {
      c.starts.insert(pick(nodes));
      if (coin()) {
        c.finals.emplace();
        for (const auto& id : nodes) {
          if (coin()) c.finals->insert(id);
        }
      }
      for (int i = uniform(0, 4); i > 0; --i) {
        c.edges.emplace(pick(nodes), pick(nodes));
      }
    }
    if (c.poset) {
      for (int i = uniform(0, 3); i > 0; --i) {
        c.constraints.emplace(pick(nodes), pick(nodes));
      }
    }
    return c;
  }

 private:
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[uniform(0, static_cast<int>(items.size()) - 1)];
  }
  std::string text() {
    static const std::vector<std::string> pieces = {
        "a", "B c", "\"", "\\", "\n", "\t", "#", "{", "}", "é", "->", ";"};
    std::string out;
    for (int i = uniform(1, 4); i > 0; --i) out += pick(pieces);
    return out;
  }
  Thimac thimac(int depth, int index) {
    Thimac t;
    t.id = "T" + std::to_string(depth) + "_" + std::to_string(index);
    if (coin()) t.name = text();
    for (K kind : kAllStageKinds) {
      if (coin()) t.stages.insert(kind);
    }
    if (depth < 2) {
      for (int i = uniform(0, 2); i > 0; --i) {
        t.children.push_back(thimac(depth + 1, i));
      }
    }
    return t;
  }

  std::mt19937 rng_;
};

TEST(RoundTripTest, RandomInputs) {
  RandomModels gen(1234);
  for (int round = 0; round < 300; ++round) {
    const StaticModel model = gen.model();
    const auto parsed_model = parse_model(pretty_print(model), "r.tm");
    ASSERT_TRUE(parsed_model.ok()) << pretty_print(model);
    EXPECT_EQ(*parsed_model, model) << pretty_print(model);

    const auto events = gen.events(model);
    const auto parsed_events =
        parse_events(pretty_print(events), "r.tme", model);
    ASSERT_TRUE(parsed_events.ok()) << pretty_print(events);
    EXPECT_EQ(*parsed_events, events);

    const Chronology chron = gen.chronology(events);
    const auto parsed = parse_behavior(pretty_print(chron), "r.tmb", events);
    ASSERT_TRUE(parsed.ok()) << pretty_print(chron);
    EXPECT_EQ(*parsed, chron) << pretty_print(chron);
  }
}

// Random edits of corpus text never crash the parser, and every outcome is
// either a value without errors or errors without a value, with spans
// inside the file.
TEST(ParserFuzzTest, MutatedCorpusIsHandled) {
  const auto f = testing::load_fixture("restaurant.tm", "restaurant.tme",
                                       "restaurant_script.tmb");
  const std::vector<std::string> sources = {
      testing::read_file(testing::corpus_path("restaurant.tm")),
      testing::read_file(testing::corpus_path("restaurant.tme")),
      testing::read_file(testing::corpus_path("restaurant_script.tmb")),
  };
  const std::string alphabet = "{};:,.-><~#\"\\ \n\rAzé0";
  std::mt19937 rng(99);
  auto uniform = [&](std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(0, hi)(rng);
  };
  auto check = [](const auto& outcome, const std::string& text) {
    EXPECT_EQ(outcome.ok(), !has_errors(outcome.diagnostics));
    const auto lines = std::count(text.begin(), text.end(), '\n') + 1;
    for (const auto& d : outcome.diagnostics) {
      if (!d.span) continue;
      EXPECT_GE(d.span->line, 1);
      EXPECT_LE(d.span->line, lines);
      EXPECT_GE(d.span->column, 1);
    }
  };
  for (int round = 0; round < 600; ++round) {
    const std::size_t which = round % sources.size();
    std::string text = sources[which];
    for (std::size_t edits = 1 + uniform(4); edits > 0; --edits) {
      const std::size_t at = uniform(text.size() - 1);
      switch (uniform(2)) {
        case 0:
          text.erase(at, 1 + uniform(8));
          break;
        case 1:
          text.insert(at, 1, alphabet[uniform(alphabet.size() - 1)]);
          break;
        default:
          text[at] = alphabet[uniform(alphabet.size() - 1)];
      }
      if (text.empty()) text = " ";
    }
    if (which == 0) check(parse_model(text, "fuzz.tm"), text);
    if (which == 1) check(parse_events(text, "fuzz.tme", f.model), text);
    if (which == 2) check(parse_behaviors(text, "fuzz.tmb", f.events), text);
  }
}

}  // namespace
}  // namespace tmkit
