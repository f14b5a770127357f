// Copyright 2026 The spg Authors
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

#include <benchmark/benchmark.h>

#include "spg/markov_chain.hpp"
#include "spg/reduction.hpp"
#include "spg/solvers.hpp"

namespace {

using namespace spg;

// Restarting line chain: forward 1/3, back to 0 with 1/2, sink with 1/6.
MarkovChain line_chain(std::size_t n) {
  MarkovChain mc;
  mc.rows.resize(n + 2);
  const VertexId goal = static_cast<VertexId>(n);
  const VertexId sink = static_cast<VertexId>(n + 1);
  for (VertexId v = 0; v < n; ++v) {
    VertexId next = v + 1;
    mc.rows[v].push_back({0 == v ? v : 0, Rational(1, 2)});
    if (next != static_cast<VertexId>(0)) {
      mc.rows[v].push_back({next, Rational(1, 3)});
    }
    mc.rows[v].push_back({sink, Rational(1, 6)});
    std::sort(mc.rows[v].begin(), mc.rows[v].end(),
              [](const auto& a, const auto& b) { return a.to < b.to; });
  }
  mc.rows[goal].push_back({goal, Rational(1)});
  mc.rows[sink].push_back({sink, Rational(1)});
  return mc;
}

Arena chain_game(std::size_t n) {
  Arena a;
  for (std::size_t v = 0; v < n; ++v) {
    a.add_vertex(v % 3 == 0   ? Owner::kEve
                 : v % 3 == 1 ? Owner::kAdam
                              : Owner::kRandom);
  }
  for (VertexId v = 0; v < n; ++v) {
    VertexId next = static_cast<VertexId>((v + 1) % n);
    if (a.owner(v) == Owner::kRandom) {
      if (next == 0) {
        a.add_edge(v, 0, Rational(1));
      } else {
        a.add_edge(v, next, Rational(1, 3));
        a.add_edge(v, 0, Rational(2, 3));
      }
    } else {
      a.add_edge(v, next);
      if (next != 0) a.add_edge(v, 0);
    }
  }
  return a;
}

void BM_reach_probability(benchmark::State& state) {
  MarkovChain mc = line_chain(static_cast<std::size_t>(state.range(0)));
  std::vector<VertexId> target = {static_cast<VertexId>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(reach_probability(mc, target));
  }
}
BENCHMARK(BM_reach_probability)->Arg(8)->Arg(32)->Arg(128);

void BM_bsccs(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  MarkovChain mc;
  mc.rows.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    mc.rows[v].push_back({static_cast<VertexId>((v + 1) % n), Rational(1)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(bsccs(mc));
  }
}
BENCHMARK(BM_bsccs)->Arg(1000)->Arg(100000);

void BM_reduce_default_alpha(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Arena g = chain_game(n);
  PriorityFn p(n);
  for (std::size_t v = 0; v < n; ++v) p[v] = static_cast<Priority>(v % 4);
  AlphaSchedule alpha = default_alpha(n, max_denominator(g));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce(g, p, alpha));
  }
}
BENCHMARK(BM_reduce_default_alpha)->Arg(6)->Arg(12)->Arg(24);

void BM_oracle_parity(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Arena g = chain_game(n);
  PriorityFn p(n);
  for (std::size_t v = 0; v < n; ++v) p[v] = static_cast<Priority>(v % 3);
  Objective objective = ParityObjective{p};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_values(g, objective));
  }
}
BENCHMARK(BM_oracle_parity)->Arg(6)->Arg(9);

void BM_strategy_iteration(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Arena g = chain_game(n);
  ReachabilityObjective objective{{static_cast<VertexId>(n - 1)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(strategy_iteration(g, objective));
  }
}
BENCHMARK(BM_strategy_iteration)->Arg(9)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
