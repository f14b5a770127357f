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

#include "spg/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spg/errors.hpp"

namespace spg {

namespace {

const Rational kOne(1);

std::vector<bool> target_mask(std::size_t n,
                              const std::vector<VertexId>& target) {
  std::vector<bool> mask(n, false);
  for (VertexId t : target) mask[t] = true;
  return mask;
}

ValueVector evaluate_pair(const Arena& arena, const Objective& objective,
                          const PureStrategy& eve, const PureStrategy& adam) {
  MarkovChain mc = induce(arena, eve, adam);
  if (const auto* reach = std::get_if<ReachabilityObjective>(&objective)) {
    return reach_probability(mc, reach->target);
  }
  return parity_value(mc, std::get<ParityObjective>(objective).priorities);
}

void fold_min(ValueVector& acc, const ValueVector& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (v[i] < acc[i]) acc[i] = v[i];
  }
}

void fold_max(ValueVector& acc, const ValueVector& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (v[i] > acc[i]) acc[i] = v[i];
  }
}

}  // namespace

StrategySpace::StrategySpace(const Arena& arena, Owner player)
    : arena_(&arena), player_(player), count_(1) {
  for (VertexId v = 0; v < arena.size(); ++v) {
    if (arena.owner(v) == player_) {
      owned_.push_back(v);
      count_ *= static_cast<unsigned long>(arena.succ[v].size());
    }
  }
}

PureStrategy StrategySpace::first() const {
  PureStrategy s;
  s.player = player_;
  s.choice.assign(arena_->size(), kNoVertex);
  for (VertexId v : owned_) {
    s.choice[v] = arena_->succ[v].front();
  }
  return s;
}

bool StrategySpace::next(PureStrategy& s) const {
  for (std::size_t i = owned_.size(); i-- > 0;) {
    VertexId v = owned_[i];
    const auto& row = arena_->succ[v];
    auto it = std::lower_bound(row.begin(), row.end(), s.choice[v]);
    std::size_t idx = static_cast<std::size_t>(it - row.begin());
    if (idx + 1 < row.size()) {
      s.choice[v] = row[idx + 1];
      for (std::size_t j = i + 1; j < owned_.size(); ++j) {
        s.choice[owned_[j]] = arena_->succ[owned_[j]].front();
      }
      return true;
    }
  }
  return false;
}

SolveResult oracle_values(const Arena& arena, const Objective& objective,
                          const OracleOptions& options) {
  StrategySpace eve_space(arena, Owner::kEve);
  StrategySpace adam_space(arena, Owner::kAdam);
  mpz_class pairs = eve_space.count() * adam_space.count();
  if (pairs > mpz_class(static_cast<unsigned long>(options.pair_cap))) {
    std::ostringstream os;
    os << "strategy pair count " << pairs.get_str() << " exceeds cap "
       << options.pair_cap;
    throw EnumerationCapExceeded(os.str());
  }

  const std::size_t n = arena.size();
  std::size_t evaluations = 0;

  // Guaranteed values per Eve strategy (inf over Adam) and per Adam strategy
  // (sup over Eve), folded in a single sweep over all pairs.
  std::vector<ValueVector> row_min;
  std::vector<ValueVector> col_max;
  {
    PureStrategy sigma = eve_space.first();
    do {
      ValueVector mine(n, kOne);
      std::size_t j = 0;
      PureStrategy gamma = adam_space.first();
      do {
        ValueVector v = evaluate_pair(arena, objective, sigma, gamma);
        ++evaluations;
        fold_min(mine, v);
        if (row_min.empty()) {
          // First Eve strategy: initialize the per-Adam folds.
          col_max.push_back(std::move(v));
        } else {
          fold_max(col_max[j], v);
        }
        ++j;
      } while (adam_space.next(gamma));
      row_min.push_back(std::move(mine));
    } while (eve_space.next(sigma));
  }

  ValueVector sup_inf(n, Rational(0));
  for (const ValueVector& v : row_min) fold_max(sup_inf, v);
  ValueVector inf_sup(n, kOne);
  for (const ValueVector& v : col_max) fold_min(inf_sup, v);
  if (sup_inf != inf_sup) {
    throw Error("oracle: sup-inf and inf-sup disagree; this indicates a bug");
  }

  SolveResult result;
  result.method = SolveMethod::kOracle;
  result.values = sup_inf;
  result.iterations = evaluations;

  // Lexicographically least strategies achieving the value at every vertex;
  // pure memoryless determinacy guarantees one exists on each side.
  {
    std::size_t i = 0;
    PureStrategy sigma = eve_space.first();
    while (i < row_min.size() && row_min[i] != result.values) {
      eve_space.next(sigma);
      ++i;
    }
    if (i == row_min.size()) {
      throw Error("oracle: no uniformly optimal Eve strategy; this is a bug");
    }
    result.eve = std::move(sigma);
  }
  {
    std::size_t j = 0;
    PureStrategy gamma = adam_space.first();
    while (j < col_max.size() && col_max[j] != result.values) {
      adam_space.next(gamma);
      ++j;
    }
    if (j == col_max.size()) {
      throw Error("oracle: no uniformly optimal Adam strategy; this is a bug");
    }
    result.adam = std::move(gamma);
  }
  return result;
}

SolveResult value_iteration(const Arena& arena,
                            const ReachabilityObjective& objective,
                            double tolerance, std::size_t max_iters) {
  const std::size_t n = arena.size();
  std::vector<bool> in_target = target_mask(n, objective.target);

  std::vector<double> x(n, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    if (in_target[v]) x[v] = 1.0;
  }
  std::vector<double> next = x;

  SolveResult result;
  result.method = SolveMethod::kValueIteration;
  result.converged = false;
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    double delta = 0.0;
    for (VertexId v = 0; v < n; ++v) {
      if (in_target[v]) continue;
      double val = 0.0;
      switch (arena.owner(v)) {
        case Owner::kEve: {
          val = 0.0;
          for (VertexId w : arena.succ[v]) val = std::max(val, x[w]);
          break;
        }
        case Owner::kAdam: {
          val = 1.0;
          for (VertexId w : arena.succ[v]) val = std::min(val, x[w]);
          break;
        }
        case Owner::kRandom: {
          val = 0.0;
          for (std::size_t i = 0; i < arena.succ[v].size(); ++i) {
            val += arena.prob[v][i].to_double() * x[arena.succ[v][i]];
          }
          break;
        }
      }
      next[v] = val;
      delta = std::max(delta, std::abs(val - x[v]));
    }
    x.swap(next);
    ++result.iterations;
    if (delta < tolerance) {
      result.converged = true;
      break;
    }
  }

  result.approx_values = x;
  result.eve.player = Owner::kEve;
  result.eve.choice.assign(n, kNoVertex);
  result.adam.player = Owner::kAdam;
  result.adam.choice.assign(n, kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    if (arena.owner(v) == Owner::kRandom) continue;
    const bool maximize = arena.owner(v) == Owner::kEve;
    PureStrategy& s = maximize ? result.eve : result.adam;
    VertexId best = arena.succ[v].front();
    for (VertexId w : arena.succ[v]) {
      if (maximize ? x[w] > x[best] : x[w] < x[best]) best = w;
    }
    s.choice[v] = best;
  }
  return result;
}

namespace {

// Largest set of non-target vertices from which Adam can keep every play
// away from the target, given Eve's fixed choices: Adam vertices need some
// successor inside, Eve/random vertices need all relevant successors inside.
std::vector<bool> adam_avoid_set(const Arena& arena,
                                 const std::vector<bool>& in_target,
                                 const PureStrategy& sigma) {
  const std::size_t n = arena.size();
  std::vector<bool> in_set(n);
  for (VertexId v = 0; v < n; ++v) in_set[v] = !in_target[v];
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < n; ++v) {
      if (!in_set[v]) continue;
      bool keep = false;
      switch (arena.owner(v)) {
        case Owner::kAdam: {
          keep = false;
          for (VertexId w : arena.succ[v]) keep = keep || in_set[w];
          break;
        }
        case Owner::kEve:
          keep = in_set[sigma.at(v)];
          break;
        case Owner::kRandom: {
          keep = true;
          for (VertexId w : arena.succ[v]) keep = keep && in_set[w];
          break;
        }
      }
      if (!keep) {
        in_set[v] = false;
        changed = true;
      }
    }
  }
  return in_set;
}

// Exact best response of Adam against a fixed Eve strategy, by policy
// iteration with exact evaluations. Vertices in the avoid set are pinned to
// value 0 by a choice that stays inside the set.
std::pair<ValueVector, PureStrategy> adam_best_response(
    const Arena& arena, const std::vector<VertexId>& target,
    const std::vector<bool>& in_target, const PureStrategy& sigma) {
  const std::size_t n = arena.size();
  std::vector<bool> avoid = adam_avoid_set(arena, in_target, sigma);

  PureStrategy gamma;
  gamma.player = Owner::kAdam;
  gamma.choice.assign(n, kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    if (arena.owner(v) != Owner::kAdam) continue;
    gamma.choice[v] = arena.succ[v].front();
    if (avoid[v]) {
      for (VertexId w : arena.succ[v]) {
        if (avoid[w]) {
          gamma.choice[v] = w;
          break;
        }
      }
    }
  }

  std::size_t guard = 0;
  while (true) {
    if (++guard > 10'000'000) {
      throw Error("strategy iteration failed to terminate; this is a bug");
    }
    ValueVector x = reach_probability(induce(arena, sigma, gamma), target);
    bool improved = false;
    for (VertexId v = 0; v < n; ++v) {
      if (arena.owner(v) != Owner::kAdam || avoid[v] || in_target[v]) continue;
      VertexId best = gamma.choice[v];
      for (VertexId w : arena.succ[v]) {
        if (x[w] < x[best]) best = w;
      }
      if (x[best] < x[gamma.choice[v]]) {
        gamma.choice[v] = best;
        improved = true;
      }
    }
    if (!improved) return {std::move(x), std::move(gamma)};
  }
}

}  // namespace

SolveResult strategy_iteration(const Arena& arena,
                               const ReachabilityObjective& objective) {
  const std::size_t n = arena.size();
  std::vector<bool> in_target = target_mask(n, objective.target);

  StrategySpace eve_space(arena, Owner::kEve);
  PureStrategy sigma = eve_space.first();

  SolveResult result;
  result.method = SolveMethod::kStrategyIteration;
  std::size_t guard = 0;
  while (true) {
    if (++guard > 10'000'000) {
      throw Error("strategy iteration failed to terminate; this is a bug");
    }
    auto [x, gamma] = adam_best_response(arena, objective.target, in_target,
                                         sigma);
    ++result.iterations;
    bool improved = false;
    for (VertexId v = 0; v < n; ++v) {
      if (arena.owner(v) != Owner::kEve || in_target[v]) continue;
      VertexId best = sigma.choice[v];
      for (VertexId w : arena.succ[v]) {
        if (x[w] > x[best]) best = w;
      }
      if (x[best] > x[sigma.choice[v]]) {
        sigma.choice[v] = best;
        improved = true;
      }
    }
    if (!improved) {
      result.values = std::move(x);
      result.eve = std::move(sigma);
      result.adam = std::move(gamma);
      return result;
    }
  }
}

TransferReport verify_transfer(const Arena& spg, const PriorityFn& priorities,
                               const AlphaSchedule& alpha,
                               const OracleOptions& options) {
  ReductionOutput reduced = reduce(spg, priorities, alpha);

  StrategySpace eve_space(spg, Owner::kEve);
  StrategySpace adam_space(spg, Owner::kAdam);
  mpz_class pairs = eve_space.count() * adam_space.count();
  if (pairs > mpz_class(static_cast<unsigned long>(options.pair_cap))) {
    std::ostringstream os;
    os << "strategy pair count " << pairs.get_str() << " exceeds cap "
       << options.pair_cap;
    throw EnumerationCapExceeded(os.str());
  }

  const std::size_t n = spg.size();
  const std::size_t nr = reduced.ssg.size();

  std::vector<PureStrategy> eves;
  {
    PureStrategy s = eve_space.first();
    do {
      eves.push_back(s);
    } while (eve_space.next(s));
  }
  std::vector<PureStrategy> adams;
  {
    PureStrategy s = adam_space.first();
    do {
      adams.push_back(s);
    } while (adam_space.next(s));
  }

  std::vector<ValueVector> row_min_g(eves.size(), ValueVector(n, kOne));
  std::vector<ValueVector> row_min_t(eves.size(), ValueVector(nr, kOne));
  std::vector<ValueVector> col_max_g(adams.size(), ValueVector(n, Rational(0)));
  std::vector<ValueVector> col_max_t(adams.size(),
                                     ValueVector(nr, Rational(0)));

  for (std::size_t i = 0; i < eves.size(); ++i) {
    PureStrategy lifted_eve = reduced.lift(eves[i]);
    for (std::size_t j = 0; j < adams.size(); ++j) {
      ValueVector vg =
          parity_value(induce(spg, eves[i], adams[j]), priorities);
      ValueVector vt = reach_probability(
          induce(reduced.ssg, lifted_eve, reduced.lift(adams[j])),
          reduced.target);
      fold_min(row_min_g[i], vg);
      fold_max(col_max_g[j], vg);
      fold_min(row_min_t[i], vt);
      fold_max(col_max_t[j], vt);
    }
  }

  TransferReport report;
  report.spg_values.assign(n, Rational(0));
  for (const ValueVector& v : row_min_g) fold_max(report.spg_values, v);
  report.ssg_values.assign(nr, Rational(0));
  for (const ValueVector& v : row_min_t) fold_max(report.ssg_values, v);

  for (std::size_t i = 0; i < eves.size(); ++i) {
    if (row_min_t[i] != report.ssg_values) continue;
    ++report.eve_optimal_count;
    if (row_min_g[i] != report.spg_values) {
      report.holds = false;
      report.failures.push_back(
          {Owner::kEve, eves[i], row_min_t[i], row_min_g[i]});
    }
  }
  for (std::size_t j = 0; j < adams.size(); ++j) {
    if (col_max_t[j] != report.ssg_values) continue;
    ++report.adam_optimal_count;
    if (col_max_g[j] != report.spg_values) {
      report.holds = false;
      report.failures.push_back(
          {Owner::kAdam, adams[j], col_max_t[j], col_max_g[j]});
    }
  }
  return report;
}

SeparationReport separation_check(const Arena& spg,
                                  const PriorityFn& priorities,
                                  const OracleOptions& options) {
  StrategySpace eve_space(spg, Owner::kEve);
  StrategySpace adam_space(spg, Owner::kAdam);
  mpz_class pairs = eve_space.count() * adam_space.count();
  if (pairs > mpz_class(static_cast<unsigned long>(options.pair_cap))) {
    std::ostringstream os;
    os << "strategy pair count " << pairs.get_str() << " exceeds cap "
       << options.pair_cap;
    throw EnumerationCapExceeded(os.str());
  }

  const std::size_t n = spg.size();
  SeparationReport report;
  report.epsilon = epsilon(n, max_denominator(spg));

  std::vector<std::vector<Rational>> values(n);
  {
    PureStrategy sigma = eve_space.first();
    do {
      PureStrategy gamma = adam_space.first();
      do {
        ValueVector v =
            parity_value(induce(spg, sigma, gamma), priorities);
        for (VertexId u = 0; u < n; ++u) values[u].push_back(v[u]);
        ++report.pair_count;
      } while (adam_space.next(gamma));
    } while (eve_space.next(sigma));
  }

  for (VertexId u = 0; u < n; ++u) {
    auto& vals = values[u];
    std::sort(vals.begin(), vals.end());
    for (std::size_t i = 1; i < vals.size(); ++i) {
      if (vals[i] == vals[i - 1]) continue;
      Rational gap = vals[i] - vals[i - 1];
      if (!report.min_nonzero_gap || gap < *report.min_nonzero_gap) {
        report.min_nonzero_gap = gap;
      }
      if (gap <= report.epsilon) {
        report.violations.push_back({u, vals[i - 1], vals[i]});
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

}  // namespace spg
