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


#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "tmkit/behavior.h"
#include "tmkit/dominators.h"
#include "tmkit/dot.h"
#include "tmkit/dsl.h"
#include "tmkit/dynamics.h"
#include "tmkit/validate.h"

namespace tmkit {
namespace {

std::string corpus(const std::string& file) {
  std::ifstream in(std::string(TMKIT_CORPUS_DIR) + "/" + file,
                   std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

struct Restaurant {
  std::string model_text = corpus("restaurant.tm");
  std::string events_text = corpus("restaurant.tme");
  StaticModel model = *parse_model(model_text, "restaurant.tm");
  std::vector<EventDef> events =
      *parse_events(events_text, "restaurant.tme", model);
};

const Restaurant& restaurant() {
  static const Restaurant r;
  return r;
}

void BM_ParseModel(benchmark::State& state) {
  const auto& r = restaurant();
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_model(r.model_text, "restaurant.tm"));
  }
  state.SetBytesProcessed(state.iterations() * r.model_text.size());
}
BENCHMARK(BM_ParseModel);

void BM_ValidateStatic(benchmark::State& state) {
  const auto& r = restaurant();
  for (auto _ : state) benchmark::DoNotOptimize(validate_static(r.model));
}
BENCHMARK(BM_ValidateStatic);

void BM_InduceOrder(benchmark::State& state) {
  const auto& r = restaurant();
  for (auto _ : state) {
    benchmark::DoNotOptimize(induce_order(r.model, r.events, true));
  }
}
BENCHMARK(BM_InduceOrder);

void BM_RenderEvents(benchmark::State& state) {
  const auto& r = restaurant();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        to_dot(RenderKind::kEvents, {&r.model, &r.events}));
  }
}
BENCHMARK(BM_RenderEvents);

std::vector<std::vector<std::size_t>> random_graph(std::size_t n,
                                                   double out_degree) {
  std::mt19937 rng(3);
  std::bernoulli_distribution edge(out_degree / n);
  std::vector<std::vector<std::size_t>> g(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (a + 1 < n) g[a].push_back(a + 1);
    for (std::size_t b = 0; b < n; ++b) {
      if (edge(rng)) g[a].push_back(b);
    }
  }
  return g;
}

void BM_Dominators(benchmark::State& state) {
  const auto g = random_graph(state.range(0), 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(DominatorTree(g, 0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dominators)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

// A chain of events with every induced pair of a chain checked.
void BM_ValidateChronology(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Chronology chron;
  chron.name = "Chain";
  chron.graph = true;
  InducedOrder induced;
  for (std::size_t i = 0; i < n; ++i) {
    chron.nodes.insert("E" + std::to_string(i));
    if (i > 0) {
      const EventPair pair{"E" + std::to_string(i - 1), "E" + std::to_string(i)};
      chron.edges.insert(pair);
      induced.precedences[pair] = {"arc"};
    }
  }
  chron.starts.insert("E0");
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_chronology(chron, induced));
  }
}
BENCHMARK(BM_ValidateChronology)->RangeMultiplier(4)->Range(16, 1024);

void BM_EnumeratePoset(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Chronology chron;
  chron.name = "Free";
  chron.poset = true;
  for (std::size_t i = 0; i < n; ++i) chron.nodes.insert("E" + std::to_string(i));
  chron.constraints.emplace("E0", "E1");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_behaviors(chron, 1));
}
BENCHMARK(BM_EnumeratePoset)->DenseRange(4, 8, 2);

void BM_EnumerateWalks(benchmark::State& state) {
  Chronology chron;
  chron.name = "Loop";
  chron.graph = true;
  chron.nodes = {"A", "B", "C"};
  chron.starts = {"A"};
  chron.edges = {{"A", "B"}, {"B", "C"}, {"C", "A"}, {"B", "A"}, {"C", "C"}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_behaviors(chron, state.range(0)));
  }
}
BENCHMARK(BM_EnumerateWalks)->DenseRange(6, 12, 3);

}  // namespace
}  // namespace tmkit

BENCHMARK_MAIN();
