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

#ifndef SPG_ARENA_HPP_
#define SPG_ARENA_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "spg/rational.hpp"

namespace spg {

/// Dense vertex index, 0..n-1 within an arena.
using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

enum class Owner : std::uint8_t { kEve, kAdam, kRandom };

const char* owner_name(Owner o);

/// Priority function of a parity objective, indexed by vertex.
using Priority = unsigned;
using PriorityFn = std::vector<Priority>;

/// Per-vertex exact probabilities, indexed by vertex.
using ValueVector = std::vector<Rational>;

/// Two-player stochastic arena: a directed game graph whose vertices are
/// partitioned between Eve, Adam and chance, with an exact distribution
/// attached to every random vertex.
///
/// Successor lists are kept sorted and duplicate-free. For a random vertex v,
/// prob[v] is parallel to succ[v]; for player vertices prob[v] stays empty.
/// The struct is plain data so that candidate (possibly invalid) arenas can
/// be represented; validate() reports every violated invariant.
struct Arena {
  struct Vertex {
    Owner owner = Owner::kRandom;
    std::string label;  // optional display name, empty = none

    bool operator==(const Vertex&) const = default;
  };

  std::vector<Vertex> vertices;
  std::vector<std::vector<VertexId>> succ;
  std::vector<std::vector<Rational>> prob;

  bool operator==(const Arena&) const = default;

  std::size_t size() const { return vertices.size(); }
  Owner owner(VertexId v) const { return vertices[v].owner; }
  bool has_edge(VertexId from, VertexId to) const;

  /// Appends a vertex and returns its id.
  VertexId add_vertex(Owner owner, std::string label = {});
  /// Appends an edge from a player vertex.
  void add_edge(VertexId from, VertexId to);
  /// Appends an edge from a random vertex with its probability.
  void add_edge(VertexId from, VertexId to, Rational p);
};

struct ReachabilityObjective {
  std::vector<VertexId> target;  // sorted, duplicate-free

  bool operator==(const ReachabilityObjective&) const = default;
};

struct ParityObjective {
  PriorityFn priorities;

  bool operator==(const ParityObjective&) const = default;
};

using Objective = std::variant<ParityObjective, ReachabilityObjective>;

/// Deterministic memoryless strategy of one player: a successor choice for
/// every vertex that player owns. choice[v] == kNoVertex at all other
/// vertices.
struct PureStrategy {
  Owner player = Owner::kEve;
  std::vector<VertexId> choice;

  VertexId at(VertexId v) const { return choice[v]; }

  bool operator==(const PureStrategy&) const = default;
};

/// One violated structural invariant, as data rather than an exception.
struct Violation {
  enum class Kind {
    kBlockingVertex,         // vertex without a successor
    kUnsortedSuccessors,     // successor list not sorted/unique or id out of range
    kDistributionSum,        // random vertex probabilities do not sum to 1
    kProbabilityOutOfRange,  // entry outside (0, 1]
    kDeltaShapeMismatch,     // prob list length disagrees with succ list
    kDeltaOnPlayerVertex,    // delta defined on an Eve/Adam vertex
    kEmptyTarget,            // reachability target empty
    kTargetOutOfRange,       // reachability target not a subset of V
    kPriorityNotTotal,       // parity priorities missing for some vertex
  };

  Kind kind;
  VertexId vertex = kNoVertex;
  std::string message;
};

/// Checks every Arena and Objective invariant on arbitrary candidate input.
/// Returns one entry per violation; an empty result means the game is valid.
std::vector<Violation> validate(const Arena& arena, const Objective& objective);

/// Minimum positive transition probability over all random vertices.
/// Throws ArenaHasNoRandomTransitions when no random transition exists.
Rational delta_min(const Arena& arena);

/// Maximum denominator across all random-transition probabilities (stored in
/// lowest terms), or 1 when there are none.
mpz_class max_denominator(const Arena& arena);

struct MarkovChain;

/// Resolves both players' choices, turning the arena into a Markov chain
/// over the same vertex set. Throws StrategyEdgeMissing if a strategy picks
/// a non-edge.
MarkovChain induce(const Arena& arena, const PureStrategy& eve,
                   const PureStrategy& adam);

}  // namespace spg

#endif  // SPG_ARENA_HPP_
