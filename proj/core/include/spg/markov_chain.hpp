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

#ifndef SPG_MARKOV_CHAIN_HPP_
#define SPG_MARKOV_CHAIN_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "spg/arena.hpp"

namespace spg {

/// Finite discrete-time Markov chain with an exact, sparse, row-stochastic
/// transition matrix. Rows are sorted by target and contain only positive
/// entries.
struct MarkovChain {
  struct Entry {
    VertexId to;
    Rational p;
  };

  std::vector<std::vector<Entry>> rows;
  std::optional<VertexId> initial;

  std::size_t size() const { return rows.size(); }

  /// Row-sum and shape check for candidate chains (used by tests and the
  /// round-trip invariant); returns violations like validate() does.
  std::vector<Violation> validate() const;

  /// Views the chain as an all-random arena over the same vertex set.
  Arena as_arena() const;
};

enum class ParityClass : std::uint8_t { kEven, kOdd, kUnclassified };

/// Bottom strongly connected components of a chain. Each component is a
/// sorted vertex set; components are ordered by their smallest vertex.
struct BsccDecomposition {
  std::vector<std::vector<VertexId>> bsccs;
  std::vector<ParityClass> parity_class;  // parallel to bsccs

  bool contains(std::size_t bscc_index, VertexId v) const;
};

/// All BSCCs of the chain. Iterative Tarjan, linear in edges, stack-safe on
/// chains with 1e5+ states. parity_class is kUnclassified throughout.
BsccDecomposition bsccs(const MarkovChain& mc);

/// Sets each component's class to the parity of its minimum priority.
BsccDecomposition classify_bsccs(BsccDecomposition decomposition,
                                 const PriorityFn& priorities);

/// Exact probability of reaching `target` from every state: 1 on the target,
/// 0 outside Pre*(target), elsewhere the unique solution of the restricted
/// linear system, by exact Gaussian elimination.
ValueVector reach_probability(const MarkovChain& mc,
                              const std::vector<VertexId>& target);

/// Exact probability of satisfying the parity objective from every state:
/// the probability of reaching the union of even BSCCs.
ValueVector parity_value(const MarkovChain& mc, const PriorityFn& priorities);

/// Probability, per state, of reaching any pBSCC vertex of a gadget-induced
/// chain before being absorbed by a sink.
ValueVector crosspath_probability(const MarkovChain& mc,
                                  const std::vector<VertexId>& pbscc_vertices);

/// Minimum and maximum, over the vertices of one pBSCC, of the exact
/// probability of reaching the winning sink.
std::pair<Rational, Rational> win_in_pbscc(const MarkovChain& mc,
                                           const std::vector<VertexId>& pbscc,
                                           VertexId win_sink);

}  // namespace spg

#endif  // SPG_MARKOV_CHAIN_HPP_
