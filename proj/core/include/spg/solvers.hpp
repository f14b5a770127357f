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

#ifndef SPG_SOLVERS_HPP_
#define SPG_SOLVERS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "spg/arena.hpp"
#include "spg/markov_chain.hpp"
#include "spg/reduction.hpp"

namespace spg {

/// Lazily enumerates every pure memoryless strategy of one player, in
/// lexicographic order by vertex index then successor index.
class StrategySpace {
 public:
  StrategySpace(const Arena& arena, Owner player);

  /// Number of strategies (product of out-degrees over owned vertices;
  /// exactly one when the player owns nothing).
  const mpz_class& count() const { return count_; }

  /// First strategy: every owned vertex picks its lowest successor.
  PureStrategy first() const;

  /// Advances to the next strategy in order; false after the last one.
  bool next(PureStrategy& s) const;

  const std::vector<VertexId>& owned() const { return owned_; }

 private:
  const Arena* arena_;
  Owner player_;
  std::vector<VertexId> owned_;
  mpz_class count_;
};

enum class SolveMethod { kOracle, kValueIteration, kStrategyIteration };

struct SolveResult {
  SolveMethod method = SolveMethod::kOracle;
  ValueVector values;                // exact; empty for value iteration
  std::vector<double> approx_values; // value iteration only
  PureStrategy eve;
  PureStrategy adam;
  std::size_t iterations = 0;
  bool converged = true;  // false when value iteration hit max_iters
};

struct OracleOptions {
  /// Upper bound on |Sigma_Eve| * |Sigma_Adam|; beyond it the oracle throws
  /// EnumerationCapExceeded.
  std::uint64_t pair_cap = 1'000'000;
};

/// Ground-truth solver: evaluates every pure strategy pair exactly and
/// returns the vertexwise sup-inf value together with lexicographically
/// least witnessing strategies. Also computes the inf-sup value and checks
/// the two agree vertexwise, exactly.
SolveResult oracle_values(const Arena& arena, const Objective& objective,
                          const OracleOptions& options = {});

/// Floating-point Bellman iteration for reachability, from the indicator of
/// the target. Stops when the sup-norm change drops below `tolerance`;
/// `converged` is false when max_iters is hit first. Greedy strategies are
/// read off the final values, ties broken toward the lowest successor.
SolveResult value_iteration(const Arena& arena,
                            const ReachabilityObjective& objective,
                            double tolerance, std::size_t max_iters);

/// Exact strategy iteration for reachability: alternates Eve's greedy
/// improvement with Adam's exact best response (policy iteration over the
/// fixed-Eve MDP, each evaluation an exact linear solve). Values are exact
/// and match oracle_values wherever both run.
SolveResult strategy_iteration(const Arena& arena,
                               const ReachabilityObjective& objective);

/// Optimality-transfer verdict for one game and schedule.
struct TransferReport {
  struct Counterexample {
    Owner player;
    PureStrategy strategy;      // on the original arena
    ValueVector reduced_best;   // its guaranteed values in the reduced game
    ValueVector original_best;  // its guaranteed values in the original game
  };

  bool holds = true;
  ValueVector spg_values;              // oracle values of the original game
  ValueVector ssg_values;              // oracle values of the reduced game
  std::size_t eve_optimal_count = 0;   // optimal Eve strategies in the SSG
  std::size_t adam_optimal_count = 0;
  std::vector<Counterexample> failures;
};

/// Checks that every oracle-optimal strategy of the reduced game (either
/// player, optimal at every vertex simultaneously) is also oracle-optimal
/// in the original parity game.
TransferReport verify_transfer(const Arena& spg, const PriorityFn& priorities,
                               const AlphaSchedule& alpha,
                               const OracleOptions& options = {});

/// Exhaustive check of the value-separation property.
struct SeparationReport {
  struct GapViolation {
    VertexId vertex;
    Rational lower;
    Rational upper;  // distinct values with 0 < upper - lower <= epsilon
  };

  bool holds = true;
  Rational epsilon;
  std::optional<Rational> min_nonzero_gap;
  std::size_t pair_count = 0;
  std::vector<GapViolation> violations;
};

/// Enumerates all strategy pairs, computes the exact parity value at every
/// vertex, and verifies that any two distinct values at the same vertex
/// differ by strictly more than epsilon(n, M).
SeparationReport separation_check(const Arena& spg,
                                  const PriorityFn& priorities,
                                  const OracleOptions& options = {});

}  // namespace spg

#endif  // SPG_SOLVERS_HPP_
