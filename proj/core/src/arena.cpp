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

#include <algorithm>
#include <sstream>

#include "spg/errors.hpp"

namespace spg {

const char* owner_name(Owner o) {
  switch (o) {
    case Owner::kEve:
      return "eve";
    case Owner::kAdam:
      return "adam";
    case Owner::kRandom:
      return "random";
  }
  return "?";
}

bool Arena::has_edge(VertexId from, VertexId to) const {
  const auto& row = succ[from];
  return std::binary_search(row.begin(), row.end(), to);
}

VertexId Arena::add_vertex(Owner owner, std::string label) {
  vertices.push_back({owner, std::move(label)});
  succ.emplace_back();
  prob.emplace_back();
  return static_cast<VertexId>(vertices.size() - 1);
}

namespace {

// Keeps succ sorted (and prob aligned for random sources) on insertion.
void insert_edge(Arena& a, VertexId from, VertexId to,
                 const Rational* p) {
  auto& row = a.succ[from];
  auto it = std::lower_bound(row.begin(), row.end(), to);
  std::size_t pos = static_cast<std::size_t>(it - row.begin());
  row.insert(it, to);
  if (p != nullptr) {
    a.prob[from].insert(a.prob[from].begin() + pos, *p);
  }
}

std::string vertex_name(const Arena& a, VertexId v) {
  if (v < a.size() && !a.vertices[v].label.empty()) {
    return a.vertices[v].label;
  }
  std::ostringstream os;
  os << "v" << v;
  return os.str();
}

}  // namespace

void Arena::add_edge(VertexId from, VertexId to) {
  insert_edge(*this, from, to, nullptr);
}

void Arena::add_edge(VertexId from, VertexId to, Rational p) {
  insert_edge(*this, from, to, &p);
}

std::vector<Violation> validate(const Arena& arena,
                                const Objective& objective) {
  std::vector<Violation> out;
  const std::size_t n = arena.size();
  auto report = [&out](Violation::Kind kind, VertexId v, std::string msg) {
    out.push_back({kind, v, std::move(msg)});
  };

  for (VertexId v = 0; v < n; ++v) {
    const auto& row = arena.succ[v];
    if (row.empty()) {
      report(Violation::Kind::kBlockingVertex, v,
             "vertex " + vertex_name(arena, v) + " has no successor");
    }
    bool shape_ok = true;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] >= n || (i > 0 && row[i] <= row[i - 1])) {
        report(Violation::Kind::kUnsortedSuccessors, v,
               "successor list of " + vertex_name(arena, v) +
                   " is not a sorted set of vertex ids");
        shape_ok = false;
        break;
      }
    }

    if (arena.owner(v) != Owner::kRandom) {
      if (!arena.prob[v].empty()) {
        report(Violation::Kind::kDeltaOnPlayerVertex, v,
               "transition probabilities attached to " +
                   std::string(owner_name(arena.owner(v))) + " vertex " +
                   vertex_name(arena, v));
      }
      continue;
    }

    if (arena.prob[v].size() != row.size()) {
      report(Violation::Kind::kDeltaShapeMismatch, v,
             "random vertex " + vertex_name(arena, v) + " has " +
                 std::to_string(arena.prob[v].size()) + " probabilities for " +
                 std::to_string(row.size()) + " successors");
      continue;
    }
    if (!shape_ok) continue;

    Rational sum;
    bool entries_ok = true;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Rational& p = arena.prob[v][i];
      if (p.sign() <= 0 || p > Rational(1)) {
        std::ostringstream os;
        os << "edge " << vertex_name(arena, v) << " -> "
           << vertex_name(arena, row[i]) << " has probability " << p
           << " outside (0, 1]";
        report(Violation::Kind::kProbabilityOutOfRange, v, os.str());
        entries_ok = false;
      }
      sum += p;
    }
    if (entries_ok && sum != Rational(1)) {
      std::ostringstream os;
      os << "random vertex " << vertex_name(arena, v)
         << ": distribution sums to " << sum << " != 1";
      report(Violation::Kind::kDistributionSum, v, os.str());
    }
  }

  if (const auto* reach = std::get_if<ReachabilityObjective>(&objective)) {
    if (reach->target.empty()) {
      report(Violation::Kind::kEmptyTarget, kNoVertex,
             "reachability target set is empty");
    }
    for (VertexId t : reach->target) {
      if (t >= n) {
        report(Violation::Kind::kTargetOutOfRange, t,
               "target vertex id " + std::to_string(t) + " out of range");
      }
    }
  } else {
    const auto& p = std::get<ParityObjective>(objective).priorities;
    if (p.size() != n) {
      report(Violation::Kind::kPriorityNotTotal, kNoVertex,
             "priority function defined on " + std::to_string(p.size()) +
                 " of " + std::to_string(n) + " vertices");
    }
  }

  return out;
}

Rational delta_min(const Arena& arena) {
  const Rational* best = nullptr;
  for (VertexId v = 0; v < arena.size(); ++v) {
    if (arena.owner(v) != Owner::kRandom) continue;
    for (const Rational& p : arena.prob[v]) {
      if (p.sign() > 0 && (best == nullptr || p < *best)) best = &p;
    }
  }
  if (best == nullptr) {
    throw ArenaHasNoRandomTransitions(
        "delta_min is undefined: arena has no random transition");
  }
  return *best;
}

mpz_class max_denominator(const Arena& arena) {
  mpz_class m = 1;
  for (VertexId v = 0; v < arena.size(); ++v) {
    if (arena.owner(v) != Owner::kRandom) continue;
    for (const Rational& p : arena.prob[v]) {
      if (p.den() > m) m = p.den();
    }
  }
  return m;
}

}  // namespace spg
