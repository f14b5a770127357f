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

#include "spg/game_format.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "spg/errors.hpp"

namespace spg {

namespace {

using json = nlohmann::ordered_json;

// 1-based line/column of a byte offset, for parse diagnostics.
std::pair<int, int> position_of(std::string_view text, std::size_t offset) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail(const std::string& message) {
  throw SemanticError(message);
}

Owner parse_owner(const std::string& s) {
  if (s == "eve") return Owner::kEve;
  if (s == "adam") return Owner::kAdam;
  if (s == "random") return Owner::kRandom;
  fail("unknown owner \"" + s + "\" (expected eve, adam or random)");
}

Rational parse_probability(const json& j, VertexId from, VertexId to) {
  std::ostringstream where;
  where << "edge " << from << " -> " << to;
  if (j.is_number()) {
    fail(where.str() +
         ": probabilities must be exact strings like \"1/10\" or \"0.1\", "
         "not JSON numbers");
  }
  if (!j.is_string()) {
    fail(where.str() + ": probability must be a string");
  }
  auto r = Rational::parse(j.get<std::string>());
  if (!r) {
    fail(where.str() + ": cannot parse probability \"" +
         j.get<std::string>() + "\" exactly");
  }
  return *r;
}

}  // namespace

Game parse_game(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, col);
  }

  if (!doc.is_object()) fail("top-level document must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    fail("missing \"vertices\" array");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    fail("missing \"edges\" array");
  }
  if (!doc.contains("objective") || !doc["objective"].is_object()) {
    fail("missing \"objective\" object");
  }

  const auto& jverts = doc["vertices"];
  const std::size_t n = jverts.size();
  Game game;
  game.arena.vertices.resize(n);
  game.arena.succ.resize(n);
  game.arena.prob.resize(n);

  std::vector<bool> seen(n, false);
  std::vector<bool> has_priority(n, false);
  PriorityFn priorities(n, 0);
  for (const auto& jv : jverts) {
    if (!jv.is_object() || !jv.contains("id") ||
        !jv["id"].is_number_unsigned()) {
      fail("every vertex needs an unsigned \"id\"");
    }
    std::uint64_t id = jv["id"].get<std::uint64_t>();
    if (id >= n) {
      fail("vertex id " + std::to_string(id) + " out of range (ids must be 0.." +
           std::to_string(n - 1) + ")");
    }
    if (seen[id]) fail("duplicate vertex id " + std::to_string(id));
    seen[id] = true;
    if (!jv.contains("owner") || !jv["owner"].is_string()) {
      fail("vertex " + std::to_string(id) + " needs an \"owner\" string");
    }
    auto& vertex = game.arena.vertices[id];
    vertex.owner = parse_owner(jv["owner"].get<std::string>());
    if (jv.contains("label")) {
      if (!jv["label"].is_string()) {
        fail("vertex " + std::to_string(id) + ": label must be a string");
      }
      vertex.label = jv["label"].get<std::string>();
    }
    if (jv.contains("priority")) {
      if (!jv["priority"].is_number_unsigned()) {
        fail("vertex " + std::to_string(id) +
             ": priority must be an unsigned integer");
      }
      priorities[id] = jv["priority"].get<Priority>();
      has_priority[id] = true;
    }
  }

  for (const auto& je : doc["edges"]) {
    if (!je.is_object() || !je.contains("from") || !je.contains("to") ||
        !je["from"].is_number_unsigned() || !je["to"].is_number_unsigned()) {
      fail("every edge needs unsigned \"from\" and \"to\"");
    }
    std::uint64_t from = je["from"].get<std::uint64_t>();
    std::uint64_t to = je["to"].get<std::uint64_t>();
    if (from >= n || to >= n) {
      fail("edge " + std::to_string(from) + " -> " + std::to_string(to) +
           " references an unknown vertex");
    }
    VertexId f = static_cast<VertexId>(from);
    VertexId t = static_cast<VertexId>(to);
    if (game.arena.has_edge(f, t)) {
      fail("duplicate edge " + std::to_string(from) + " -> " +
           std::to_string(to));
    }
    if (game.arena.owner(f) == Owner::kRandom) {
      if (!je.contains("prob")) {
        fail("edge " + std::to_string(from) + " -> " + std::to_string(to) +
             " leaves a random vertex and needs a \"prob\"");
      }
      game.arena.add_edge(f, t, parse_probability(je["prob"], f, t));
    } else {
      if (je.contains("prob")) {
        fail("edge " + std::to_string(from) + " -> " + std::to_string(to) +
             " leaves a player vertex and must not carry a \"prob\"");
      }
      game.arena.add_edge(f, t);
    }
  }

  const auto& jobj = doc["objective"];
  if (!jobj.contains("type") || !jobj["type"].is_string()) {
    fail("objective needs a \"type\"");
  }
  std::string type = jobj["type"].get<std::string>();
  if (type == "parity") {
    for (VertexId v = 0; v < n; ++v) {
      if (!has_priority[v]) {
        fail("parity objective: vertex " + std::to_string(v) +
             " has no priority");
      }
    }
    game.objective = ParityObjective{std::move(priorities)};
  } else if (type == "reachability") {
    if (!jobj.contains("target") || !jobj["target"].is_array()) {
      fail("reachability objective needs a \"target\" array");
    }
    std::vector<VertexId> target;
    for (const auto& jt : jobj["target"]) {
      if (!jt.is_number_unsigned()) {
        fail("target entries must be unsigned vertex ids");
      }
      std::uint64_t t = jt.get<std::uint64_t>();
      if (t >= n) {
        fail("target vertex id " + std::to_string(t) + " out of range");
      }
      target.push_back(static_cast<VertexId>(t));
    }
    std::sort(target.begin(), target.end());
    target.erase(std::unique(target.begin(), target.end()), target.end());
    game.objective = ReachabilityObjective{std::move(target)};
  } else {
    fail("unknown objective type \"" + type + "\"");
  }

  auto violations = validate(game.arena, game.objective);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "invalid game:";
    for (const auto& v : violations) os << "\n  - " << v.message;
    fail(os.str());
  }
  return game;
}

std::string serialize_game(const Game& game, bool pretty, bool approx) {
  const Arena& arena = game.arena;
  const auto* parity = std::get_if<ParityObjective>(&game.objective);

  json doc;
  doc["vertices"] = json::array();
  for (VertexId v = 0; v < arena.size(); ++v) {
    json jv;
    jv["id"] = v;
    jv["owner"] = owner_name(arena.owner(v));
    if (parity != nullptr) jv["priority"] = parity->priorities[v];
    if (!arena.vertices[v].label.empty()) {
      jv["label"] = arena.vertices[v].label;
    }
    doc["vertices"].push_back(std::move(jv));
  }
  doc["edges"] = json::array();
  for (VertexId v = 0; v < arena.size(); ++v) {
    for (std::size_t i = 0; i < arena.succ[v].size(); ++i) {
      json je;
      je["from"] = v;
      je["to"] = arena.succ[v][i];
      if (arena.owner(v) == Owner::kRandom) {
        je["prob"] = arena.prob[v][i].str();
        if (approx) je["prob_approx"] = arena.prob[v][i].decimal();
      }
      doc["edges"].push_back(std::move(je));
    }
  }
  if (parity != nullptr) {
    doc["objective"] = {{"type", "parity"}};
  } else {
    const auto& reach = std::get<ReachabilityObjective>(game.objective);
    doc["objective"] = {{"type", "reachability"}, {"target", reach.target}};
  }
  return pretty ? doc.dump(2) + "\n" : doc.dump();
}

Game load_game(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_game(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + std::to_string(e.line()) + ":" +
                         std::to_string(e.column()) + ": " + e.what(),
                     e.line(), e.column());
  } catch (const SemanticError& e) {
    throw SemanticError(path + ": " + e.what());
  }
}

void save_game(const std::string& path, const Game& game, bool pretty,
               bool approx) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << serialize_game(game, pretty, approx);
}

AlphaSchedule parse_alpha_schedule(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, col);
  }
  if (!doc.is_object() || !doc.contains("alpha") || !doc["alpha"].is_array() ||
      doc["alpha"].empty()) {
    fail("alpha document needs a non-empty \"alpha\" array");
  }
  std::vector<Rational> values;
  for (const auto& jv : doc["alpha"]) {
    if (jv.is_number()) {
      fail("alpha values must be exact strings, not JSON numbers");
    }
    if (!jv.is_string()) fail("alpha values must be strings");
    auto r = Rational::parse(jv.get<std::string>());
    if (!r) {
      fail("cannot parse alpha value \"" + jv.get<std::string>() +
           "\" exactly");
    }
    values.push_back(*r);
  }
  return AlphaSchedule::from_values(std::move(values));
}

AlphaSchedule load_alpha_schedule(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_alpha_schedule(buf.str());
  } catch (const SemanticError& e) {
    throw SemanticError(path + ": " + e.what());
  }
}

}  // namespace spg
