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

#include <algorithm>
#include <cstddef>
#include <deque>
#include <sstream>

#include "spg/errors.hpp"

namespace spg {

MarkovChain induce(const Arena& arena, const PureStrategy& eve,
                   const PureStrategy& adam) {
  const std::size_t n = arena.size();
  MarkovChain mc;
  mc.rows.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    switch (arena.owner(v)) {
      case Owner::kRandom: {
        auto& row = mc.rows[v];
        row.reserve(arena.succ[v].size());
        for (std::size_t i = 0; i < arena.succ[v].size(); ++i) {
          row.push_back({arena.succ[v][i], arena.prob[v][i]});
        }
        break;
      }
      case Owner::kEve:
      case Owner::kAdam: {
        const PureStrategy& s = arena.owner(v) == Owner::kEve ? eve : adam;
        VertexId w = v < s.choice.size() ? s.choice[v] : kNoVertex;
        if (w == kNoVertex || !arena.has_edge(v, w)) {
          std::ostringstream os;
          os << owner_name(arena.owner(v)) << " strategy at vertex " << v
             << " picks ";
          if (w == kNoVertex) {
            os << "no successor";
          } else {
            os << w << ", which is not an edge";
          }
          throw StrategyEdgeMissing(os.str());
        }
        mc.rows[v].push_back({w, Rational(1)});
        break;
      }
    }
  }
  return mc;
}

std::vector<Violation> MarkovChain::validate() const {
  std::vector<Violation> out;
  const std::size_t n = size();
  for (VertexId v = 0; v < n; ++v) {
    const auto& row = rows[v];
    if (row.empty()) {
      out.push_back({Violation::Kind::kBlockingVertex, v,
                     "state " + std::to_string(v) + " has no transition"});
      continue;
    }
    bool shape_ok = true;
    Rational sum;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].to >= n || (i > 0 && row[i].to <= row[i - 1].to)) {
        out.push_back({Violation::Kind::kUnsortedSuccessors, v,
                       "transition list of state " + std::to_string(v) +
                           " is not a sorted set of state ids"});
        shape_ok = false;
        break;
      }
      if (row[i].p.sign() <= 0 || row[i].p > Rational(1)) {
        std::ostringstream os;
        os << "transition " << v << " -> " << row[i].to << " has probability "
           << row[i].p << " outside (0, 1]";
        out.push_back({Violation::Kind::kProbabilityOutOfRange, v, os.str()});
        shape_ok = false;
      }
      sum += row[i].p;
    }
    if (shape_ok && sum != Rational(1)) {
      std::ostringstream os;
      os << "state " << v << ": row sums to " << sum << " != 1";
      out.push_back({Violation::Kind::kDistributionSum, v, os.str()});
    }
  }
  return out;
}

Arena MarkovChain::as_arena() const {
  Arena a;
  for (VertexId v = 0; v < size(); ++v) {
    a.add_vertex(Owner::kRandom);
  }
  for (VertexId v = 0; v < size(); ++v) {
    for (const Entry& e : rows[v]) {
      a.add_edge(v, e.to, e.p);
    }
  }
  return a;
}

bool BsccDecomposition::contains(std::size_t bscc_index, VertexId v) const {
  const auto& b = bsccs[bscc_index];
  return std::binary_search(b.begin(), b.end(), v);
}

BsccDecomposition bsccs(const MarkovChain& mc) {
  const std::size_t n = mc.size();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<std::uint32_t> scc_of(n, kUnvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> tarjan_stack;
  std::uint32_t next_index = 0;
  std::uint32_t scc_count = 0;
  std::vector<std::vector<VertexId>> sccs;

  struct Frame {
    VertexId v;
    std::size_t edge;
  };
  std::vector<Frame> frames;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    tarjan_stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& row = mc.rows[f.v];
      if (f.edge < row.size()) {
        VertexId w = row[f.edge++].to;
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          tarjan_stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        VertexId v = f.v;
        frames.pop_back();
        if (!frames.empty()) {
          lowlink[frames.back().v] = std::min(lowlink[frames.back().v],
                                              lowlink[v]);
        }
        if (lowlink[v] == index[v]) {
          std::vector<VertexId> scc;
          VertexId w;
          do {
            w = tarjan_stack.back();
            tarjan_stack.pop_back();
            on_stack[w] = false;
            scc_of[w] = scc_count;
            scc.push_back(w);
          } while (w != v);
          sccs.push_back(std::move(scc));
          ++scc_count;
        }
      }
    }
  }

  // An SCC is bottom iff no positive transition leaves it.
  std::vector<bool> is_bottom(scc_count, true);
  for (VertexId v = 0; v < n; ++v) {
    for (const auto& e : mc.rows[v]) {
      if (scc_of[e.to] != scc_of[v]) is_bottom[scc_of[v]] = false;
    }
  }

  BsccDecomposition out;
  for (std::uint32_t c = 0; c < scc_count; ++c) {
    if (!is_bottom[c]) continue;
    std::sort(sccs[c].begin(), sccs[c].end());
    out.bsccs.push_back(std::move(sccs[c]));
  }
  std::sort(out.bsccs.begin(), out.bsccs.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.parity_class.assign(out.bsccs.size(), ParityClass::kUnclassified);
  return out;
}

BsccDecomposition classify_bsccs(BsccDecomposition decomposition,
                                 const PriorityFn& priorities) {
  for (std::size_t i = 0; i < decomposition.bsccs.size(); ++i) {
    Priority min_p = std::numeric_limits<Priority>::max();
    for (VertexId v : decomposition.bsccs[i]) {
      min_p = std::min(min_p, priorities[v]);
    }
    decomposition.parity_class[i] =
        min_p % 2 == 0 ? ParityClass::kEven : ParityClass::kOdd;
  }
  return decomposition;
}

namespace {

// Exact Gaussian elimination with partial pivoting by largest magnitude.
// Solves M x = b in place; m is square and dense.
void solve_dense(std::vector<std::vector<Rational>>& m,
                 std::vector<Rational>& b) {
  const std::size_t k = b.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    Rational best = m[col][col].abs();
    for (std::size_t r = col + 1; r < k; ++r) {
      Rational cand = m[r][col].abs();
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best.is_zero()) {
      throw SingularSystem(
          "reachability system is singular; this indicates a bug");
    }
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      std::swap(b[pivot], b[col]);
    }
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t c = col; c < k; ++c) m[col][c] *= inv;
    b[col] *= inv;
    for (std::size_t r = col + 1; r < k; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational factor = m[r][col];
      for (std::size_t c = col; c < k; ++c) {
        m[r][c] -= factor * m[col][c];
      }
      b[r] -= factor * b[col];
    }
  }
  for (std::size_t col = k; col-- > 0;) {
    for (std::size_t r = 0; r < col; ++r) {
      if (m[r][col].is_zero()) continue;
      b[r] -= m[r][col] * b[col];
      m[r][col] = Rational(0);
    }
  }
}

}  // namespace

ValueVector reach_probability(const MarkovChain& mc,
                              const std::vector<VertexId>& target) {
  const std::size_t n = mc.size();
  std::vector<bool> in_target(n, false);
  for (VertexId t : target) in_target[t] = true;

  // Pre*(target) by reverse BFS over positive transitions.
  std::vector<std::vector<VertexId>> preds(n);
  for (VertexId v = 0; v < n; ++v) {
    for (const auto& e : mc.rows[v]) preds[e.to].push_back(v);
  }
  std::vector<bool> can_reach(n, false);
  std::deque<VertexId> queue;
  for (VertexId t : target) {
    if (!can_reach[t]) {
      can_reach[t] = true;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId u : preds[v]) {
      if (!can_reach[u]) {
        can_reach[u] = true;
        queue.push_back(u);
      }
    }
  }

  ValueVector x(n, Rational(0));
  std::vector<std::size_t> unknown_index(n, 0);
  std::vector<VertexId> unknowns;
  for (VertexId v = 0; v < n; ++v) {
    if (in_target[v]) {
      x[v] = Rational(1);
    } else if (can_reach[v]) {
      unknown_index[v] = unknowns.size();
      unknowns.push_back(v);
    }
  }
  if (unknowns.empty()) return x;

  const std::size_t k = unknowns.size();
  std::vector<std::vector<Rational>> m(k,
                                       std::vector<Rational>(k, Rational(0)));
  std::vector<Rational> b(k, Rational(0));
  for (std::size_t r = 0; r < k; ++r) {
    VertexId v = unknowns[r];
    m[r][r] = Rational(1);
    for (const auto& e : mc.rows[v]) {
      if (in_target[e.to]) {
        b[r] += e.p;
      } else if (can_reach[e.to]) {
        m[r][unknown_index[e.to]] -= e.p;
      }
      // Transitions into states that cannot reach the target contribute 0.
    }
  }
  solve_dense(m, b);
  for (std::size_t r = 0; r < k; ++r) x[unknowns[r]] = std::move(b[r]);
  return x;
}

ValueVector parity_value(const MarkovChain& mc, const PriorityFn& priorities) {
  BsccDecomposition decomposition = classify_bsccs(bsccs(mc), priorities);
  std::vector<VertexId> even_union;
  for (std::size_t i = 0; i < decomposition.bsccs.size(); ++i) {
    if (decomposition.parity_class[i] == ParityClass::kEven) {
      even_union.insert(even_union.end(), decomposition.bsccs[i].begin(),
                        decomposition.bsccs[i].end());
    }
  }
  if (even_union.empty()) return ValueVector(mc.size(), Rational(0));
  std::sort(even_union.begin(), even_union.end());
  return reach_probability(mc, even_union);
}

ValueVector crosspath_probability(const MarkovChain& mc,
                                  const std::vector<VertexId>& pbscc_vertices) {
  std::vector<VertexId> target = pbscc_vertices;
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  return reach_probability(mc, target);
}

std::pair<Rational, Rational> win_in_pbscc(const MarkovChain& mc,
                                           const std::vector<VertexId>& pbscc,
                                           VertexId win_sink) {
  ValueVector x = reach_probability(mc, {win_sink});
  Rational lo = x[pbscc.front()];
  Rational hi = lo;
  for (VertexId v : pbscc) {
    if (x[v] < lo) lo = x[v];
    if (x[v] > hi) hi = x[v];
  }
  return {lo, hi};
}

}  // namespace spg
