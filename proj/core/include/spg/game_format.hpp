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

#ifndef SPG_GAME_FORMAT_HPP_
#define SPG_GAME_FORMAT_HPP_

#include <string>
#include <string_view>

#include "spg/arena.hpp"
#include "spg/reduction.hpp"

namespace spg {

struct Game {
  Arena arena;
  Objective objective;
};

/// Reads the JSON game document. Probabilities must be strings ("1/10" or
/// an exact decimal like "0.1"); JSON numbers are rejected so no value ever
/// passes through binary floating point. Throws ParseError (with line and
/// column) for malformed documents and SemanticError when the parsed game
/// fails validation.
Game parse_game(std::string_view text);

/// Serializes a game document. parse_game(serialize_game(g)) reproduces g
/// exactly; probabilities appear as lowest-terms fraction strings. With
/// `approx` set, a "prob_approx" decimal hint is added next to each
/// probability (ignored by the parser).
std::string serialize_game(const Game& game, bool pretty = true,
                           bool approx = false);

/// Loads and saves game files; load wraps parse errors with the file name.
Game load_game(const std::string& path);
void save_game(const std::string& path, const Game& game, bool pretty = true,
               bool approx = false);

/// Graphviz view of a game: Eve square, Adam pentagon, random circle;
/// absorbing vertices are filled (green when they are reachability targets,
/// red otherwise). Output is deterministic.
std::string export_dot(const Game& game);

/// Alpha schedule document: {"alpha": ["1/8", "1/64", ...]} with one exact
/// value per priority, index = priority.
AlphaSchedule parse_alpha_schedule(std::string_view text);
AlphaSchedule load_alpha_schedule(const std::string& path);

}  // namespace spg

#endif  // SPG_GAME_FORMAT_HPP_
