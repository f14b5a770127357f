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

#include "spg/markov_chain.hpp"

#include <doctest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "support/mc_sim.hpp"
#include "support/test_games.hpp"

namespace spg {
namespace {

MarkovChain running_example_chain() {
  return induce(testing::running_example(), testing::running_example_sigma(),
                testing::running_example_gamma());
}

TEST_CASE("running example chain has the single BSCC {v3, v4, v5}") {
  BsccDecomposition d = bsccs(running_example_chain());
  REQUIRE(d.bsccs.size() == 1);
  CHECK(d.bsccs[0] == std::vector<VertexId>{3, 4, 5});
  CHECK(d.parity_class[0] == ParityClass::kUnclassified);
}

TEST_CASE("two absorbing states are two singleton BSCCs") {
  MarkovChain mc;
  mc.rows.resize(3);
  mc.rows[0] = {{1, Rational(1, 2)}, {2, Rational(1, 2)}};
  mc.rows[1] = {{1, Rational(1)}};
  mc.rows[2] = {{2, Rational(1)}};
  BsccDecomposition d = bsccs(mc);
  REQUIRE(d.bsccs.size() == 2);
  CHECK(d.bsccs[0] == std::vector<VertexId>{1});
  CHECK(d.bsccs[1] == std::vector<VertexId>{2});
}

TEST_CASE("3-cycle feeding an absorbing sink leaves only the sink") {
  MarkovChain mc;
  mc.rows.resize(4);
  mc.rows[0] = {{1, Rational(1)}};
  mc.rows[1] = {{2, Rational(1)}};
  mc.rows[2] = {{0, Rational(1, 2)}, {3, Rational(1, 2)}};
  mc.rows[3] = {{3, Rational(1)}};
  BsccDecomposition d = bsccs(mc);
  REQUIRE(d.bsccs.size() == 1);
  CHECK(d.bsccs[0] == std::vector<VertexId>{3});
}

TEST_CASE("classification by minimum priority") {
  BsccDecomposition d = bsccs(running_example_chain());
  d = classify_bsccs(d, testing::running_example_priorities());
  REQUIRE(d.bsccs.size() == 1);
  CHECK(d.parity_class[0] == ParityClass::kOdd);  // min{3,4,5} = 3

  MarkovChain mc;
  mc.rows.resize(3);
  mc.rows[0] = {{0, Rational(1)}};
  mc.rows[1] = {{2, Rational(1)}};
  mc.rows[2] = {{1, Rational(1)}};
  BsccDecomposition e = classify_bsccs(bsccs(mc), {0, 2, 7});
  REQUIRE(e.bsccs.size() == 2);
  CHECK(e.parity_class[0] == ParityClass::kEven);  // singleton, p = 0
  CHECK(e.parity_class[1] == ParityClass::kEven);  // min{2,7} = 2
}

TEST_CASE("bsccs is iterative: a 100000-state cycle does not overflow") {
  const std::size_t n = 100000;
  MarkovChain mc;
  mc.rows.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    mc.rows[v] = {{static_cast<VertexId>((v + 1) % n), Rational(1)}};
  }
  BsccDecomposition d = bsccs(mc);
  REQUIRE(d.bsccs.size() == 1);
  CHECK(d.bsccs[0].size() == n);
}

TEST_CASE("reach_probability basics") {
  // Target state itself.
  MarkovChain mc;
  mc.rows.resize(3);
  mc.rows[0] = {{1, Rational(1, 3)}, {2, Rational(2, 3)}};
  mc.rows[1] = {{1, Rational(1)}};
  mc.rows[2] = {{2, Rational(1)}};
  ValueVector x = reach_probability(mc, {1});
  CHECK(x[1] == Rational(1));
  CHECK(x[0] == Rational(1, 3));  // one-step absorption
  CHECK(x[2] == Rational(0));
}

TEST_CASE("running example chain reaches its BSCC almost surely") {
  ValueVector x = reach_probability(running_example_chain(), {3, 4, 5});
  for (VertexId v = 0; v < 6; ++v) CHECK(x[v] == Rational(1));
}

TEST_CASE("gambler chain with restart reaches the target almost surely") {
  // s0 -> s1 -> s2, forward 1/2, back to s0 with 1/2; single BSCC {s2}.
  MarkovChain mc;
  mc.rows.resize(3);
  mc.rows[0] = {{0, Rational(1, 2)}, {1, Rational(1, 2)}};
  mc.rows[1] = {{0, Rational(1, 2)}, {2, Rational(1, 2)}};
  mc.rows[2] = {{2, Rational(1)}};
  ValueVector x = reach_probability(mc, {2});
  CHECK(x[0] == Rational(1));
  CHECK(x[1] == Rational(1));
}

TEST_CASE("gambler chain with a competing sink, Monte-Carlo cross-check") {
  // Forward 1/2, or fall to the losing sink with 1/2.
  MarkovChain mc;
  mc.rows.resize(4);
  mc.rows[0] = {{1, Rational(1, 2)}, {3, Rational(1, 2)}};
  mc.rows[1] = {{2, Rational(1, 2)}, {3, Rational(1, 2)}};
  mc.rows[2] = {{2, Rational(1)}};
  mc.rows[3] = {{3, Rational(1)}};
  ValueVector x = reach_probability(mc, {2});
  CHECK(x[0] == Rational(1, 4));

  auto est = testing::estimate_reach(mc, 0, {2}, 1'000'000, 20260810);
  double err = std::abs(est.p_hat - x[0].to_double());
  CHECK(err <= 3.0 * est.std_error + 1e-9);
}

TEST_CASE("restarting gambler with competing sink, Monte-Carlo cross-check") {
  // s_i: forward 1/3, back to s0 1/6, sink 1/2. Non-trivial exact solve.
  MarkovChain mc;
  mc.rows.resize(4);
  mc.rows[0] = {{0, Rational(1, 6)}, {1, Rational(1, 3)}, {3, Rational(1, 2)}};
  mc.rows[1] = {{0, Rational(1, 6)}, {2, Rational(1, 3)}, {3, Rational(1, 2)}};
  mc.rows[2] = {{2, Rational(1)}};
  mc.rows[3] = {{3, Rational(1)}};
  ValueVector x = reach_probability(mc, {2});
  // x0 = 1/6 x0 + 1/3 x1; x1 = 1/6 x0 + 1/3.
  // => x0 (1 - 1/6 - 1/18) = 1/9 => x0 = (1/9)/(14/18) = 1/7.
  CHECK(x[0] == Rational(1, 7));

  auto est = testing::estimate_reach(mc, 0, {2}, 1'000'000, 77);
  double err = std::abs(est.p_hat - x[0].to_double());
  CHECK(err <= 3.0 * est.std_error + 1e-9);
}

TEST_CASE("parity_value on the running example chain is zero everywhere") {
  ValueVector x = parity_value(running_example_chain(),
                               testing::running_example_priorities());
  for (VertexId v = 0; v < 6; ++v) CHECK(x[v] == Rational(0));
}

TEST_CASE("parity_value basics") {
  MarkovChain absorbing;
  absorbing.rows.resize(1);
  absorbing.rows[0] = {{0, Rational(1)}};
  CHECK(parity_value(absorbing, {0})[0] == Rational(1));

  // One even and one odd absorbing state, each reached with probability 1/2.
  MarkovChain mc;
  mc.rows.resize(3);
  mc.rows[0] = {{1, Rational(1, 2)}, {2, Rational(1, 2)}};
  mc.rows[1] = {{1, Rational(1)}};
  mc.rows[2] = {{2, Rational(1)}};
  ValueVector x = parity_value(mc, {5, 2, 3});
  CHECK(x[0] == Rational(1, 2));
  CHECK(x[1] == Rational(1));
  CHECK(x[2] == Rational(0));
}

TEST_CASE("crosspath_probability") {
  // Start inside the pBSCC: trivially one.
  MarkovChain mc;
  mc.rows.resize(3);
  mc.rows[0] = {{1, Rational(3, 4)}, {2, Rational(1, 4)}};
  mc.rows[1] = {{1, Rational(1)}};
  mc.rows[2] = {{2, Rational(1)}};
  ValueVector x = crosspath_probability(mc, {1});
  CHECK(x[1] == Rational(1));
  // A single hat-like step with sink probability 1/4 passes with 3/4.
  CHECK(x[0] == Rational(3, 4));
}

TEST_CASE("win_in_pbscc on a symmetric two-vertex loop") {
  // Gadget-shaped chain: bar0 -> hat1 -> bar1 -> hat0 -> bar0, each hat
  // leaking with probability 1/8 to its sink; one sink wins, one loses.
  const Rational a(1, 8);
  MarkovChain mc;
  mc.rows.resize(6);
  const VertexId bar0 = 0, hat0 = 1, bar1 = 2, hat1 = 3, win = 4, lose = 5;
  mc.rows[bar0] = {{hat1, Rational(1)}};
  mc.rows[hat1] = {{bar1, Rational(1) - a}, {lose, a}};
  mc.rows[bar1] = {{hat0, Rational(1)}};
  mc.rows[hat0] = {{bar0, Rational(1) - a}, {win, a}};
  mc.rows[win] = {{win, Rational(1)}};
  mc.rows[lose] = {{lose, Rational(1)}};

  auto [lo, hi] = win_in_pbscc(mc, {bar0, hat0, bar1, hat1}, win);
  CHECK(lo < hi);
  // By symmetry the two bar vertices sit at p and 1-p around 1/2.
  ValueVector x = reach_probability(mc, {win});
  CHECK(x[bar0] + x[bar1] == Rational(1));

  // Fully symmetric variant: both hats leak to the same sinks equally.
  MarkovChain sym;
  sym.rows.resize(6);
  sym.rows[bar0] = {{hat1, Rational(1)}};
  sym.rows[hat1] = {{bar1, Rational(1) - a},
                    {win, a / Rational(2)},
                    {lose, a / Rational(2)}};
  sym.rows[bar1] = {{hat0, Rational(1)}};
  sym.rows[hat0] = {{bar0, Rational(1) - a},
                    {win, a / Rational(2)},
                    {lose, a / Rational(2)}};
  sym.rows[win] = {{win, Rational(1)}};
  sym.rows[lose] = {{lose, Rational(1)}};
  auto [slo, shi] = win_in_pbscc(sym, {bar0, hat0, bar1, hat1}, win);
  CHECK(slo == Rational(1, 2));
  CHECK(shi == Rational(1, 2));
}

TEST_CASE("win_in_pbscc where only the winning sink is reachable") {
  MarkovChain mc;
  mc.rows.resize(3);
  mc.rows[0] = {{1, Rational(7, 8)}, {2, Rational(1, 8)}};
  mc.rows[1] = {{0, Rational(1)}};
  mc.rows[2] = {{2, Rational(1)}};
  auto [lo, hi] = win_in_pbscc(mc, {0, 1}, 2);
  CHECK(lo == Rational(1));
  CHECK(hi == Rational(1));
}

TEST_CASE("conservation: BSCC reach probabilities sum to one") {
  testing::Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    testing::GeneratorOptions options;
    options.n = 2 + rng.below(5);
    options.force_random_vertex = false;
    Arena a = testing::random_arena(rng, options);
    // Resolve players by their first choice to get an arbitrary chain.
    PureStrategy eve = testing::make_strategy(a, Owner::kEve, {});
    PureStrategy adam = testing::make_strategy(a, Owner::kAdam, {});
    for (VertexId v = 0; v < a.size(); ++v) {
      if (a.owner(v) == Owner::kEve) eve.choice[v] = a.succ[v].front();
      if (a.owner(v) == Owner::kAdam) adam.choice[v] = a.succ[v].front();
    }
    MarkovChain mc = induce(a, eve, adam);
    BsccDecomposition d = bsccs(mc);
    ValueVector total(mc.size(), Rational(0));
    for (const auto& b : d.bsccs) {
      ValueVector x = reach_probability(mc, b);
      for (VertexId v = 0; v < mc.size(); ++v) total[v] += x[v];
    }
    for (VertexId v = 0; v < mc.size(); ++v) CHECK(total[v] == Rational(1));

    // reach_probability satisfies its own fixed point exactly.
    if (!d.bsccs.empty()) {
      const auto& target = d.bsccs.front();
      ValueVector x = reach_probability(mc, target);
      std::vector<bool> in_target(mc.size(), false);
      for (VertexId t : target) in_target[t] = true;
      for (VertexId v = 0; v < mc.size(); ++v) {
        if (in_target[v]) {
          CHECK(x[v] == Rational(1));
          continue;
        }
        Rational expected;
        for (const auto& e : mc.rows[v]) expected += e.p * x[e.to];
        CHECK(x[v] == expected);
      }
    }
  }
}

TEST_CASE("parity complementation: shifting priorities by one flips values") {
  testing::Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    testing::GeneratorOptions options;
    options.n = 2 + rng.below(4);
    options.force_random_vertex = false;
    Arena a = testing::random_arena(rng, options);
    PureStrategy eve = testing::make_strategy(a, Owner::kEve, {});
    PureStrategy adam = testing::make_strategy(a, Owner::kAdam, {});
    for (VertexId v = 0; v < a.size(); ++v) {
      if (a.owner(v) == Owner::kEve) eve.choice[v] = a.succ[v].front();
      if (a.owner(v) == Owner::kAdam) adam.choice[v] = a.succ[v].front();
    }
    MarkovChain mc = induce(a, eve, adam);
    PriorityFn p = testing::random_priorities(rng, a.size(), 3);
    PriorityFn shifted = p;
    for (auto& x : shifted) x += 1;
    ValueVector v1 = parity_value(mc, p);
    ValueVector v2 = parity_value(mc, shifted);
    for (VertexId v = 0; v < mc.size(); ++v) {
      CHECK(v1[v] + v2[v] == Rational(1));
    }
  }
}

TEST_CASE("bsccs output is invariant under state relabeling") {
  MarkovChain mc = running_example_chain();
  const std::size_t n = mc.size();
  // Relabel v -> (v + 2) mod n.
  auto rename = [n](VertexId v) {
    return static_cast<VertexId>((v + 2) % n);
  };
  MarkovChain permuted;
  permuted.rows.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    for (const auto& e : mc.rows[v]) {
      permuted.rows[rename(v)].push_back({rename(e.to), e.p});
    }
    std::sort(permuted.rows[rename(v)].begin(), permuted.rows[rename(v)].end(),
              [](const auto& a, const auto& b) { return a.to < b.to; });
  }
  BsccDecomposition original = bsccs(mc);
  BsccDecomposition relabeled = bsccs(permuted);
  REQUIRE(original.bsccs.size() == relabeled.bsccs.size());
  for (const auto& b : original.bsccs) {
    std::vector<VertexId> mapped;
    for (VertexId v : b) mapped.push_back(rename(v));
    std::sort(mapped.begin(), mapped.end());
    CHECK(std::find(relabeled.bsccs.begin(), relabeled.bsccs.end(), mapped) !=
          relabeled.bsccs.end());
  }
}

}  // namespace
}  // namespace spg
