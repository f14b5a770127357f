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

#include <sstream>

#include "spg/game_format.hpp"

namespace spg {

namespace {

const char* owner_shape(Owner o) {
  switch (o) {
    case Owner::kEve:
      return "square";
    case Owner::kAdam:
      return "pentagon";
    case Owner::kRandom:
      return "circle";
  }
  return "circle";
}

bool is_absorbing(const Arena& a, VertexId v) {
  return a.succ[v].size() == 1 && a.succ[v][0] == v;
}

}  // namespace

std::string export_dot(const Game& game) {
  const Arena& arena = game.arena;
  const auto* parity = std::get_if<ParityObjective>(&game.objective);
  const auto* reach = std::get_if<ReachabilityObjective>(&game.objective);

  std::vector<bool> in_target(arena.size(), false);
  if (reach != nullptr) {
    for (VertexId t : reach->target) in_target[t] = true;
  }

  std::ostringstream os;
  os << "digraph game {\n";
  os << "  rankdir=LR;\n";
  for (VertexId v = 0; v < arena.size(); ++v) {
    os << "  " << v << " [shape=" << owner_shape(arena.owner(v)) << ", label=\"";
    if (!arena.vertices[v].label.empty()) {
      os << arena.vertices[v].label;
    } else {
      os << "v" << v;
    }
    if (parity != nullptr) os << "\\np=" << parity->priorities[v];
    os << "\"";
    if (is_absorbing(arena, v)) {
      os << ", style=filled, fillcolor="
         << (in_target[v] ? "palegreen" : "lightcoral");
    } else if (in_target[v]) {
      os << ", style=filled, fillcolor=palegreen";
    }
    os << "];\n";
  }
  for (VertexId v = 0; v < arena.size(); ++v) {
    for (std::size_t i = 0; i < arena.succ[v].size(); ++i) {
      os << "  " << v << " -> " << arena.succ[v][i];
      if (arena.owner(v) == Owner::kRandom) {
        os << " [label=\"" << arena.prob[v][i] << "\"]";
      }
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace spg
