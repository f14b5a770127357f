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

#include "spg/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "spg/errors.hpp"

namespace spg {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

// (n!)^2 * M^(2n^2)
mpz_class separation_denominator(std::size_t n, const mpz_class& M) {
  mpz_class f = factorial(n);
  return f * f * pow_z(M, 2 * n * n);
}

}  // namespace

AlphaSchedule AlphaSchedule::geometric(Rational first, Rational ratio) {
  AlphaSchedule s;
  s.geometric_ = {std::move(first), std::move(ratio)};
  return s;
}

AlphaSchedule AlphaSchedule::from_values(std::vector<Rational> values) {
  AlphaSchedule s;
  s.values_ = std::move(values);
  return s;
}

Rational AlphaSchedule::at(Priority k) const {
  if (geometric_) {
    return geometric_->first * geometric_->second.pow(k);
  }
  if (k >= values_.size()) {
    throw AlphaUndefinedForPriority("alpha schedule has no value for priority " +
                                    std::to_string(k));
  }
  return values_[k];
}

bool AlphaSchedule::strictly_decreasing_in_range(Priority max_priority) const {
  Rational prev = at(0);
  if (prev.sign() <= 0 || prev >= kOne) return false;
  for (Priority k = 1; k <= max_priority; ++k) {
    Rational cur = at(k);
    if (cur.sign() <= 0 || cur >= kOne || cur >= prev) return false;
    prev = std::move(cur);
  }
  return true;
}

AlphaSchedule default_alpha(std::size_t n, const mpz_class& M) {
  mpz_class f = factorial(n);
  mpz_class denom = 16 * f * f * pow_z(M, 2 * n * n + n) + 1;
  Rational base(mpz_class(1), denom);
  AlphaSchedule s = AlphaSchedule::geometric(base, base);  // base^(k+1)
  s.provenance_ = AlphaSchedule::Provenance::kDefault;
  s.default_params_ = {n, M};
  return s;
}

PureStrategy ReductionOutput::lift(const PureStrategy& s) const {
  PureStrategy lifted;
  lifted.player = s.player;
  lifted.choice.assign(ssg.size(), kNoVertex);
  for (VertexId v = 0; v < s.choice.size(); ++v) {
    if (s.choice[v] != kNoVertex) {
      lifted.choice[bar(v)] = hat(s.choice[v]);
    }
  }
  return lifted;
}

std::vector<VertexId> ReductionOutput::pbscc(
    const std::vector<VertexId>& original_set) const {
  std::vector<VertexId> out;
  out.reserve(2 * original_set.size());
  for (VertexId v : original_set) {
    out.push_back(bar(v));
    out.push_back(hat(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReductionOutput reduce(const Arena& spg, const PriorityFn& priorities,
                       const AlphaSchedule& alpha) {
  const std::size_t n = spg.size();
  ReductionOutput out;
  out.original_n = n;

  // Fetch and range-check every alpha value the arena actually uses.
  std::vector<Rational> alpha_of(n);
  for (VertexId v = 0; v < n; ++v) {
    alpha_of[v] = alpha.at(priorities[v]);
    if (alpha_of[v].sign() <= 0 || alpha_of[v] >= kOne) {
      std::ostringstream os;
      os << "alpha(" << priorities[v] << ") = " << alpha_of[v]
         << " lies outside (0, 1)";
      throw AlphaOutOfRange(os.str());
    }
  }

  Arena& g = out.ssg;
  for (VertexId v = 0; v < n; ++v) {
    g.add_vertex(spg.vertices[v].owner,
                 spg.vertices[v].label.empty() ? ""
                                               : spg.vertices[v].label + "~");
    g.add_vertex(Owner::kRandom,
                 spg.vertices[v].label.empty() ? ""
                                               : spg.vertices[v].label + "^");
  }
  out.v_win = g.add_vertex(Owner::kRandom, "win");
  out.v_lose = g.add_vertex(Owner::kRandom, "lose");
  out.target = {out.v_win};

  for (VertexId u = 0; u < n; ++u) {
    const VertexId bar_u = ReductionOutput::bar(u);
    for (std::size_t i = 0; i < spg.succ[u].size(); ++i) {
      VertexId w = spg.succ[u][i];
      if (spg.owner(u) == Owner::kRandom) {
        g.add_edge(bar_u, ReductionOutput::hat(w), spg.prob[u][i]);
      } else {
        g.add_edge(bar_u, ReductionOutput::hat(w));
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    const VertexId hat_v = ReductionOutput::hat(v);
    g.add_edge(hat_v, ReductionOutput::bar(v), kOne - alpha_of[v]);
    VertexId sink = priorities[v] % 2 == 0 ? out.v_win : out.v_lose;
    g.add_edge(hat_v, sink, alpha_of[v]);
  }
  g.add_edge(out.v_win, out.v_win, kOne);
  g.add_edge(out.v_lose, out.v_lose, kOne);
  return out;
}

AlphaCheckResult check_alpha(const AlphaSchedule& alpha, std::size_t n,
                             const mpz_class& M, const Rational& delta_min,
                             Priority max_priority) {
  if (delta_min.sign() <= 0 || delta_min > kHalf) {
    std::ostringstream os;
    os << "delta_min = " << delta_min << " outside (0, 1/2]";
    throw DeltaMinTooLarge(os.str());
  }

  AlphaCheckResult result;
  const mpz_class z = separation_denominator(n, M);
  const Rational dn = delta_min.pow(n);
  result.alpha0_bound = dn / Rational(mpz_class(8 * z));
  result.ratio_bound = dn * (kOne - delta_min) / Rational(mpz_class(8 * z + 1));

  auto range_check = [&result](Priority k, const Rational& value) {
    if (value.sign() <= 0 || value >= kOne) {
      result.violations.push_back(
          {AlphaConditionViolation::Condition::kRange, k, value, kOne});
      return false;
    }
    return true;
  };

  Rational prev = alpha.at(0);
  bool prev_ok = range_check(0, prev);
  if (prev > result.alpha0_bound) {
    result.violations.push_back({AlphaConditionViolation::Condition::kAlphaZero,
                                 0, prev, result.alpha0_bound});
  }
  for (Priority k = 1; k <= max_priority; ++k) {
    Rational cur = alpha.at(k);
    bool cur_ok = range_check(k, cur);
    if (prev_ok && cur_ok) {
      Rational ratio = cur / prev;
      if (ratio > result.ratio_bound) {
        result.violations.push_back({AlphaConditionViolation::Condition::kRatio,
                                     k - 1, ratio, result.ratio_bound});
      }
    }
    prev = std::move(cur);
    prev_ok = cur_ok;
  }
  result.ok = result.violations.empty();
  return result;
}

Rational epsilon(std::size_t n, const mpz_class& M) {
  return Rational(mpz_class(1), separation_denominator(n, M));
}

Rational crosspath_lower_bound(std::size_t n, const Rational& delta_min,
                               const Rational& alpha0) {
  const Rational x0 = delta_min * (kOne - alpha0);
  const Rational x1 = (kOne - delta_min) * (kOne - alpha0);
  const Rational x0n = x0.pow(n);
  return (kOne - x0) * x0n / ((kOne - x0) - (kOne - x0n) * x1);
}

Rational win_even_lower_bound(std::size_t n, const Rational& delta_min,
                              const Rational& alpha_k,
                              const Rational& alpha_k1) {
  if (n == 0) throw Error("win_even_lower_bound needs n >= 1");
  const Rational x2 = delta_min * (kOne - alpha_k1);
  const Rational x3 = (kOne - delta_min) * (kOne - alpha_k1);
  const Rational x4 = delta_min * alpha_k;
  const Rational x5 =
      delta_min * (kOne - alpha_k) + (kOne - delta_min) * (kOne - alpha_k1);
  const Rational t = x3;
  const Rational x2nm1 = x2.pow(n - 1);
  const Rational numerator = (kOne - x2) * x2nm1 * x4;
  const Rational denominator =
      kOne - (x2 + x3) + x5 * x2nm1 * x2 + t * x2nm1 - x5 * x2nm1;
  return (kOne - alpha_k1) * numerator / denominator;
}

Rational win_odd_upper_bound(std::size_t n, const Rational& delta_min,
                             const Rational& alpha_k,
                             const Rational& alpha_k1) {
  return kOne - win_even_lower_bound(n, delta_min, alpha_k, alpha_k1);
}

Rational win_even_lower_bound_ratio_form(std::size_t n,
                                         const Rational& delta_min,
                                         const Rational& ratio) {
  const Rational d = delta_min.pow(n) * (kOne - delta_min);
  return (d - ratio) / (d + ratio);
}

Rational crosspath_lower_bound_alpha_form(std::size_t n,
                                          const Rational& delta_min,
                                          const Rational& alpha0) {
  const Rational core = delta_min.pow(n) * (kOne - alpha0).pow(n + 1);
  return core / (Rational(2) * alpha0 + core);
}

std::pair<Rational, Rational> interval_bounds(const Rational& x,
                                              const Rational& y,
                                              const Rational& p_spg) {
  Rational lo = y * p_spg - y + x * y;
  Rational hi = p_spg + kOne - x * y;
  return {std::move(lo), std::move(hi)};
}

std::pair<Rational, Rational> reduction_thresholds(const Rational& eps) {
  return {(Rational(4) - eps) / Rational(4), Rational(4) / (Rational(4) + eps)};
}

Rational sink_reach_lower_bound(std::size_t m, const Rational& s,
                                const Rational& k, const Rational& l,
                                const Rational& alpha) {
  const Rational t = kOne - alpha - s;
  const Rational sm = s.pow(m);
  const Rational numerator = (kOne - s) * sm * l;
  const Rational denominator =
      kOne - (s + t) + k * sm * s + t * sm - k * sm;
  return numerator / denominator;
}

MarkovChain worst_case_mc(std::size_t m, const Rational& s,
                          const Rational& alpha) {
  const Rational t = kOne - alpha - s;
  if (s.sign() <= 0 || alpha.sign() <= 0 || t.sign() <= 0) {
    throw Error("worst_case_mc needs s, alpha > 0 with s + alpha < 1");
  }
  // v_1..v_m are 0..m-1, then v_f, v_b, v_s.
  const VertexId v_f = static_cast<VertexId>(m);
  const VertexId v_b = static_cast<VertexId>(m + 1);
  const VertexId v_s = static_cast<VertexId>(m + 2);
  MarkovChain mc;
  mc.rows.resize(m + 3);
  mc.initial = 0;
  for (VertexId i = 0; i < m; ++i) {
    VertexId next = i + 1 == static_cast<VertexId>(m) ? v_f : i + 1;
    mc.rows[i].push_back({0, t});  // restart; a self-loop when i == 0
    mc.rows[i].push_back({next, s});
    mc.rows[i].push_back({v_s, alpha});
  }
  mc.rows[v_f].push_back({0, t});        // k = t
  mc.rows[v_f].push_back({v_b, s});      // l = s
  mc.rows[v_f].push_back({v_s, alpha});
  mc.rows[v_b].push_back({v_b, kOne});
  mc.rows[v_s].push_back({v_s, kOne});
  return mc;
}

BoundsReport bounds_report(const Arena& arena) {
  BoundsReport report;
  report.n = arena.size();
  report.M = max_denominator(arena);
  report.delta_min = delta_min(arena);
  if (report.delta_min > kHalf) {
    std::ostringstream os;
    os << "delta_min = " << report.delta_min
       << " > 1/2; bound formulas do not apply";
    throw DeltaMinTooLarge(os.str());
  }
  report.epsilon = epsilon(report.n, report.M);
  const mpz_class z = separation_denominator(report.n, report.M);
  const Rational dn = report.delta_min.pow(report.n);
  report.alpha0_max = dn / Rational(mpz_class(8 * z));
  report.ratio_max = dn * (kOne - report.delta_min) / Rational(mpz_class(8 * z + 1));
  auto thresholds = reduction_thresholds(report.epsilon);
  report.crosspath_threshold = thresholds.first;
  report.win_threshold = thresholds.second;
  return report;
}

}  // namespace spg
