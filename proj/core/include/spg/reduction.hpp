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

#ifndef SPG_REDUCTION_HPP_
#define SPG_REDUCTION_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spg/arena.hpp"
#include "spg/markov_chain.hpp"

namespace spg {

/// Priority-indexed sink probabilities for the gadget: alpha(k) is the
/// probability, at a hat vertex of priority k, of entering the matching
/// sink. Either a geometric sequence first*ratio^k or an explicit value
/// list. Range and monotonicity are checked at the point of use, so tests
/// can build deliberately non-compliant schedules.
class AlphaSchedule {
 public:
  enum class Provenance { kDefault, kUserSupplied };

  static AlphaSchedule geometric(Rational first, Rational ratio);
  static AlphaSchedule from_values(std::vector<Rational> values);

  /// Value at priority k. Throws AlphaUndefinedForPriority when an explicit
  /// list does not cover k.
  Rational at(Priority k) const;

  /// True when every value over priorities 0..max_priority lies in (0,1)
  /// and the sequence strictly decreases there.
  bool strictly_decreasing_in_range(Priority max_priority) const;

  Provenance provenance() const { return provenance_; }

  /// The (n, M) a default schedule was sized for; empty for user schedules.
  const std::optional<std::pair<std::size_t, mpz_class>>& default_params()
      const {
    return default_params_;
  }

 private:
  AlphaSchedule() = default;

  std::optional<std::pair<Rational, Rational>> geometric_;  // first, ratio
  std::vector<Rational> values_;
  Provenance provenance_ = Provenance::kUserSupplied;
  std::optional<std::pair<std::size_t, mpz_class>> default_params_;

  friend AlphaSchedule default_alpha(std::size_t n, const mpz_class& M);
};

/// The schedule alpha_k = (1 / (16 (n!)^2 M^(2n^2+n) + 1))^(k+1): a
/// polynomially-sized instance that keeps the reduced game faithful.
AlphaSchedule default_alpha(std::size_t n, const mpz_class& M);

/// Reduced game: a reachability arena with two sink vertices and two copies
/// (bar and hat) of every original vertex. Indexing is arithmetic:
/// bar(v) = 2v, hat(v) = 2v+1, then v_win, v_lose.
struct ReductionOutput {
  Arena ssg;
  VertexId v_win = kNoVertex;
  VertexId v_lose = kNoVertex;
  std::vector<VertexId> target;  // {v_win}
  std::size_t original_n = 0;

  static constexpr VertexId bar(VertexId v) { return 2 * v; }
  static constexpr VertexId hat(VertexId v) { return 2 * v + 1; }
  static constexpr VertexId original(VertexId reduced) { return reduced / 2; }

  ReachabilityObjective objective() const { return {target}; }

  /// Lifts a strategy of the original arena to the reduced one (bar
  /// vertices keep their owner; the chosen edge goes to the hat copy).
  PureStrategy lift(const PureStrategy& s) const;

  /// Bar+hat image of an original vertex set, sorted.
  std::vector<VertexId> pbscc(const std::vector<VertexId>& original_set) const;
};

/// Gadget transformation: replaces the parity objective by a reachability
/// objective toward a fresh winning sink. Every original transition is
/// routed through the target's hat copy, which leaks to v_win (even
/// priority) or v_lose (odd priority) with probability alpha(priority).
/// Throws AlphaUndefinedForPriority / AlphaOutOfRange.
ReductionOutput reduce(const Arena& spg, const PriorityFn& priorities,
                       const AlphaSchedule& alpha);

/// One failed schedule condition, with the exact values compared.
struct AlphaConditionViolation {
  enum class Condition { kRange, kAlphaZero, kRatio };
  Condition condition;
  Priority k;
  Rational lhs;
  Rational rhs;
};

struct AlphaCheckResult {
  bool ok = true;
  std::vector<AlphaConditionViolation> violations;  // in evaluation order
  Rational alpha0_bound;  // delta_min^n / (8 (n!)^2 M^(2n^2))
  Rational ratio_bound;   // delta_min^n (1-delta_min) / (8 (n!)^2 M^(2n^2)+1)
};

/// Verifies the sufficient schedule conditions exactly for k = 0 ..
/// max_priority: alpha_0 against alpha0_bound and every consecutive ratio
/// against ratio_bound, plus the (0,1) range. Throws DeltaMinTooLarge when
/// delta_min is outside (0, 1/2].
AlphaCheckResult check_alpha(const AlphaSchedule& alpha, std::size_t n,
                             const mpz_class& M, const Rational& delta_min,
                             Priority max_priority);

/// Minimum gap between distinct strategy-pair values of an n-vertex game
/// whose probabilities have denominators at most M: 1 / ((n!)^2 M^(2n^2)).
Rational epsilon(std::size_t n, const mpz_class& M);

/// Lower bound on the probability that a play from a bar vertex reaches a
/// pBSCC rather than a sink.
Rational crosspath_lower_bound(std::size_t n, const Rational& delta_min,
                               const Rational& alpha0);

/// Lower bound on the minimum probability of reaching the winning sink from
/// an even pBSCC of minimum priority k, as a function of alpha_k and
/// alpha_{k+1}; win_odd_upper_bound is its dual 1 - win_even_lower_bound.
Rational win_even_lower_bound(std::size_t n, const Rational& delta_min,
                              const Rational& alpha_k,
                              const Rational& alpha_k1);
Rational win_odd_upper_bound(std::size_t n, const Rational& delta_min,
                             const Rational& alpha_k, const Rational& alpha_k1);

/// Corollary-form bound used to derive the ratio condition:
/// (d^n(1-d) - r) / (d^n(1-d) + r) with r = alpha_{k+1}/alpha_k.
Rational win_even_lower_bound_ratio_form(std::size_t n,
                                         const Rational& delta_min,
                                         const Rational& ratio);

/// Corollary-form crosspath bound used to derive the alpha_0 condition:
/// d^n (1-a0)^(n+1) / (2 a0 + d^n (1-a0)^(n+1)). Strictly below
/// crosspath_lower_bound for a0 > 0 and delta_min <= 1/2.
Rational crosspath_lower_bound_alpha_form(std::size_t n,
                                          const Rational& delta_min,
                                          const Rational& alpha0);

/// Range that the reduced game's value is guaranteed to occupy around the
/// original game's value p, given a crosspath bound x and a win bound y:
/// [y*p - y + x*y, p + 1 - x*y].
std::pair<Rational, Rational> interval_bounds(const Rational& x,
                                              const Rational& y,
                                              const Rational& p_spg);

/// Optimality-transfer thresholds ((4-eps)/4, 4/(4+eps)).
std::pair<Rational, Rational> reduction_thresholds(const Rational& eps);

/// Reachability lower bound for a chain of m line states with forward mass
/// at least s, per-state sink probability alpha, and a frontier state with
/// return mass k and bottom mass l: (1-s) s^m l / (1 - (s+t) + k s^(m+1)
/// + t s^m - k s^m) where t = 1 - alpha - s.
Rational sink_reach_lower_bound(std::size_t m, const Rational& s,
                                const Rational& k, const Rational& l,
                                const Rational& alpha);

/// The chain on which sink_reach_lower_bound is tight: m line states with
/// forward probability s, restart probability t = 1-alpha-s, sink
/// probability alpha, and a frontier with k = t back and l = s to the
/// bottom sink. States are v_1..v_m, v_f, v_b, v_s in that order.
MarkovChain worst_case_mc(std::size_t m, const Rational& s,
                          const Rational& alpha);

/// Every derived quantity of the reduction for one arena, all exact.
struct BoundsReport {
  std::size_t n = 0;
  mpz_class M;
  Rational delta_min;
  Rational epsilon;
  Rational alpha0_max;            // largest alpha_0 the schedule may use
  Rational ratio_max;             // largest consecutive ratio
  Rational crosspath_threshold;   // (4-eps)/4
  Rational win_threshold;         // 4/(4+eps)
};

/// Computes the full report for an arena. Throws
/// ArenaHasNoRandomTransitions or DeltaMinTooLarge.
BoundsReport bounds_report(const Arena& arena);

}  // namespace spg

#endif  // SPG_REDUCTION_HPP_
