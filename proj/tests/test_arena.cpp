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

#include "spg/arena.hpp"

#include <doctest.h>

#include "spg/errors.hpp"
#include "spg/markov_chain.hpp"
#include "support/generators.hpp"
#include "support/test_games.hpp"

namespace spg {
namespace {

Objective any_parity(const Arena& a) {
  return ParityObjective{PriorityFn(a.size(), 0)};
}

TEST_CASE("minimal legal arena: one random self-loop") {
  Arena a;
  a.add_vertex(Owner::kRandom);
  a.add_edge(0, 0, Rational(1));
  CHECK(validate(a, any_parity(a)).empty());
}

TEST_CASE("distribution sum violation is reported with the exact sum") {
  Arena a;
  a.add_vertex(Owner::kRandom);
  a.add_vertex(Owner::kRandom);
  a.add_vertex(Owner::kRandom);
  a.add_edge(0, 1, Rational(1, 2));
  a.add_edge(0, 2, Rational(1, 3));
  a.add_edge(1, 1, Rational(1));
  a.add_edge(2, 2, Rational(1));
  auto violations = validate(a, any_parity(a));
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == Violation::Kind::kDistributionSum);
  CHECK(violations[0].vertex == 0);
  CHECK(violations[0].message.find("5/6") != std::string::npos);
}

TEST_CASE("running example arena is valid") {
  Arena a = testing::running_example();
  std::size_t edges = 0;
  for (const auto& row : a.succ) edges += row.size();
  CHECK(edges == 13);
  CHECK(validate(a, ParityObjective{testing::running_example_priorities()})
            .empty());
}

TEST_CASE("validate flags blocking vertices, bad probabilities and shapes") {
  Arena a;
  a.add_vertex(Owner::kEve);
  a.add_vertex(Owner::kRandom);
  // v0 blocking; v1 carries a zero-probability edge.
  a.add_edge(1, 0, Rational(0));
  a.add_edge(1, 1, Rational(1));
  auto violations = validate(a, any_parity(a));
  bool blocking = false;
  bool range = false;
  for (const auto& v : violations) {
    blocking = blocking || v.kind == Violation::Kind::kBlockingVertex;
    range = range || v.kind == Violation::Kind::kProbabilityOutOfRange;
  }
  CHECK(blocking);
  CHECK(range);
}

TEST_CASE("validate flags delta attached to a player vertex") {
  Arena a;
  a.add_vertex(Owner::kEve);
  a.add_edge(0, 0, Rational(1));  // probability on an Eve edge
  auto violations = validate(a, any_parity(a));
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == Violation::Kind::kDeltaOnPlayerVertex);
}

TEST_CASE("objective validation") {
  Arena a;
  a.add_vertex(Owner::kRandom);
  a.add_edge(0, 0, Rational(1));

  auto empty = validate(a, ReachabilityObjective{{}});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].kind == Violation::Kind::kEmptyTarget);

  auto oob = validate(a, ReachabilityObjective{{5}});
  REQUIRE(oob.size() == 1);
  CHECK(oob[0].kind == Violation::Kind::kTargetOutOfRange);

  auto partial = validate(a, ParityObjective{{}});
  REQUIRE(partial.size() == 1);
  CHECK(partial[0].kind == Violation::Kind::kPriorityNotTotal);
}

TEST_CASE("delta_min") {
  CHECK(delta_min(testing::running_example()) == Rational(1, 10));

  Arena single;
  single.add_vertex(Owner::kRandom);
  single.add_edge(0, 0, Rational(1));
  CHECK(delta_min(single) == Rational(1));

  Arena mixed;
  mixed.add_vertex(Owner::kRandom);
  mixed.add_vertex(Owner::kRandom);
  mixed.add_edge(0, 0, Rational(1, 3));
  mixed.add_edge(0, 1, Rational(2, 3));
  mixed.add_edge(1, 0, Rational(1, 2));
  mixed.add_edge(1, 1, Rational(1, 2));
  CHECK(delta_min(mixed) == Rational(1, 3));

  Arena no_random;
  no_random.add_vertex(Owner::kEve);
  no_random.add_edge(0, 0);
  CHECK_THROWS_AS(delta_min(no_random), ArenaHasNoRandomTransitions);
}

TEST_CASE("max_denominator") {
  CHECK(max_denominator(testing::running_example()) == 10);

  Arena deterministic;
  deterministic.add_vertex(Owner::kRandom);
  deterministic.add_edge(0, 0, Rational(1));
  CHECK(max_denominator(deterministic) == 1);

  Arena sevens;
  sevens.add_vertex(Owner::kRandom);
  sevens.add_vertex(Owner::kRandom);
  sevens.add_edge(0, 0, Rational(1, 3));
  sevens.add_edge(0, 1, Rational(2, 3));
  sevens.add_edge(1, 0, Rational(1, 7));
  sevens.add_edge(1, 1, Rational(6, 7));
  CHECK(max_denominator(sevens) == 7);

  Arena none;
  none.add_vertex(Owner::kAdam);
  none.add_edge(0, 0);
  CHECK(max_denominator(none) == 1);
}

TEST_CASE("delta_min and max_denominator bound every stored probability") {
  testing::Rng rng(1234);
  for (int i = 0; i < 100; ++i) {
    testing::GeneratorOptions options;
    options.n = 2 + rng.below(5);
    options.max_denominator = 16;
    Arena a = testing::random_arena(rng, options);
    Rational dmin = delta_min(a);
    mpz_class m = max_denominator(a);
    for (VertexId v = 0; v < a.size(); ++v) {
      for (const Rational& p : a.prob[v]) {
        CHECK(dmin <= p);
        CHECK(m >= p.den());
      }
    }
  }
}

TEST_CASE("induce resolves strategies into deterministic rows") {
  Arena a = testing::running_example();
  MarkovChain mc = induce(a, testing::running_example_sigma(),
                          testing::running_example_gamma());
  REQUIRE(mc.size() == 6);
  // Random rows are untouched.
  REQUIRE(mc.rows[0].size() == 2);
  CHECK(mc.rows[0][0].to == 0);
  CHECK(mc.rows[0][0].p == Rational(9, 10));
  CHECK(mc.rows[0][1].to == 1);
  CHECK(mc.rows[0][1].p == Rational(1, 10));
  // Player rows collapse to the chosen successor with probability one.
  REQUIRE(mc.rows[3].size() == 1);
  CHECK(mc.rows[3][0].to == 5);
  CHECK(mc.rows[3][0].p == Rational(1));
  REQUIRE(mc.rows[4].size() == 1);
  CHECK(mc.rows[4][0].to == 5);
  CHECK(mc.rows[4][0].p == Rational(1));
  CHECK(mc.validate().empty());
}

TEST_CASE("induce with no player vertices copies the arena") {
  Arena a;
  a.add_vertex(Owner::kRandom);
  a.add_vertex(Owner::kRandom);
  a.add_edge(0, 0, Rational(1, 2));
  a.add_edge(0, 1, Rational(1, 2));
  a.add_edge(1, 1, Rational(1));
  PureStrategy eve = testing::make_strategy(a, Owner::kEve, {});
  PureStrategy adam = testing::make_strategy(a, Owner::kAdam, {});
  MarkovChain mc = induce(a, eve, adam);
  CHECK(mc.rows[0].size() == 2);
  CHECK(mc.rows[1].size() == 1);
}

TEST_CASE("induce rejects strategies that leave the edge set") {
  Arena a = testing::running_example();
  PureStrategy bad = testing::make_strategy(a, Owner::kEve, {{3, 0}});
  CHECK_THROWS_AS(induce(a, bad, testing::running_example_gamma()),
                  StrategyEdgeMissing);
  PureStrategy missing = testing::make_strategy(a, Owner::kEve, {});
  CHECK_THROWS_AS(induce(a, missing, testing::running_example_gamma()),
                  StrategyEdgeMissing);
}

TEST_CASE("round-trip: induced chains are valid all-random arenas") {
  testing::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    testing::GeneratorOptions options;
    options.n = 1 + rng.below(5);
    Arena a = testing::random_arena(rng, options);
    REQUIRE(validate(a, any_parity(a)).empty());

    // First strategies of both players; enumeration details are exercised in
    // the solver tests.
    PureStrategy eve = testing::make_strategy(a, Owner::kEve, {});
    PureStrategy adam = testing::make_strategy(a, Owner::kAdam, {});
    for (VertexId v = 0; v < a.size(); ++v) {
      if (a.owner(v) == Owner::kEve) eve.choice[v] = a.succ[v].front();
      if (a.owner(v) == Owner::kAdam) adam.choice[v] = a.succ[v].front();
    }
    MarkovChain mc = induce(a, eve, adam);
    CHECK(mc.validate().empty());
    Arena as_arena = mc.as_arena();
    CHECK(validate(as_arena, any_parity(as_arena)).empty());
  }
}

}  // namespace
}  // namespace spg
