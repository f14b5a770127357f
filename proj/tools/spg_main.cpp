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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "spg/errors.hpp"
#include "spg/game_format.hpp"
#include "spg/markov_chain.hpp"
#include "spg/reduction.hpp"
#include "spg/solvers.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

// Exact value plus its decimal approximation; the fraction is authoritative.
std::string fmt(const spg::Rational& r) {
  return r.str() + " (~ " + r.decimal(12) + ")";
}

std::string vertex_display(const spg::Arena& arena, spg::VertexId v) {
  if (!arena.vertices[v].label.empty()) {
    return arena.vertices[v].label;
  }
  return "v" + std::to_string(v);
}

spg::AlphaSchedule resolve_alpha(const std::string& spec_text,
                                 const spg::Arena& arena) {
  if (spec_text == "default") {
    return spg::default_alpha(arena.size(), spg::max_denominator(arena));
  }
  return spg::load_alpha_schedule(spec_text);
}

const spg::ParityObjective& require_parity(const spg::Game& game,
                                           const char* subcommand) {
  const auto* parity = std::get_if<spg::ParityObjective>(&game.objective);
  if (parity == nullptr) {
    throw spg::SemanticError(std::string(subcommand) +
                             " needs a parity objective");
  }
  return *parity;
}

int cmd_validate(const std::string& path) {
  // load_game validates internally, but report the violations one by one
  // rather than as a single exception message.
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return kUsageError;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  spg::Game game;
  try {
    game = spg::parse_game(buf.str());
  } catch (const spg::SemanticError& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return kCheckFailed;
  }
  std::cout << "valid: " << game.arena.size() << " vertices, "
            << [&] {
                 std::size_t edges = 0;
                 for (const auto& row : game.arena.succ) edges += row.size();
                 return edges;
               }()
            << " edges\n";
  return kOk;
}

int cmd_bounds(const std::string& path) {
  spg::Game game = spg::load_game(path);
  spg::BoundsReport report = spg::bounds_report(game.arena);
  std::cout << "n                   = " << report.n << "\n";
  std::cout << "M                   = " << report.M.get_str() << "\n";
  std::cout << "delta_min           = " << fmt(report.delta_min) << "\n";
  std::cout << "epsilon             = " << fmt(report.epsilon) << "\n";
  std::cout << "alpha_0 requirement = " << fmt(report.alpha0_max) << "\n";
  std::cout << "ratio requirement   = " << fmt(report.ratio_max) << "\n";
  std::cout << "crosspath threshold = " << fmt(report.crosspath_threshold)
            << "\n";
  std::cout << "win threshold       = " << fmt(report.win_threshold) << "\n";
  return kOk;
}

int cmd_reduce(const std::string& path, const std::string& out,
               const std::string& alpha_spec, bool approx) {
  spg::Game game = spg::load_game(path);
  const auto& parity = require_parity(game, "reduce");
  spg::AlphaSchedule alpha = resolve_alpha(alpha_spec, game.arena);
  spg::ReductionOutput reduced = spg::reduce(game.arena, parity.priorities,
                                             alpha);
  spg::Game out_game{std::move(reduced.ssg),
                     spg::ReachabilityObjective{reduced.target}};
  spg::save_game(out, out_game, /*pretty=*/true, approx);
  std::size_t edges = 0;
  for (const auto& row : out_game.arena.succ) edges += row.size();
  std::cout << "reduced: " << out_game.arena.size() << " vertices, " << edges
            << " edges, target " << vertex_display(out_game.arena,
                                                   reduced.v_win)
            << " -> " << out << "\n";
  return kOk;
}

void print_strategy(const spg::Arena& arena, const spg::PureStrategy& s,
                    const char* name) {
  std::cout << name << ":";
  bool any = false;
  for (spg::VertexId v = 0; v < s.choice.size(); ++v) {
    if (s.choice[v] == spg::kNoVertex) continue;
    std::cout << " " << vertex_display(arena, v) << "->"
              << vertex_display(arena, s.choice[v]);
    any = true;
  }
  if (!any) std::cout << " (no choices)";
  std::cout << "\n";
}

int cmd_solve(const std::string& path, const std::string& method, double tol,
              std::size_t max_iters, std::uint64_t cap) {
  spg::Game game = spg::load_game(path);
  spg::SolveResult result;
  if (method == "oracle") {
    result = spg::oracle_values(game.arena, game.objective, {cap});
  } else {
    const auto* reach =
        std::get_if<spg::ReachabilityObjective>(&game.objective);
    if (reach == nullptr) {
      std::cerr << "method " << method
                << " needs a reachability objective; reduce the game first\n";
      return kUsageError;
    }
    if (method == "vi") {
      spg::Rational dmin(1);
      try {
        dmin = spg::delta_min(game.arena);
      } catch (const spg::ArenaHasNoRandomTransitions&) {
      }
      if (dmin.to_double() < 1e-12) {
        std::cerr << "warning: probabilities as small as " << dmin.decimal(3)
                  << " are below double precision; value iteration results "
                     "are numerically meaningless here, use oracle or si\n";
      }
      result = spg::value_iteration(game.arena, *reach, tol, max_iters);
    } else if (method == "si") {
      result = spg::strategy_iteration(game.arena, *reach);
    } else {
      std::cerr << "unknown method " << method << "\n";
      return kUsageError;
    }
  }

  for (spg::VertexId v = 0; v < game.arena.size(); ++v) {
    std::cout << vertex_display(game.arena, v) << " = ";
    if (result.method == spg::SolveMethod::kValueIteration) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.12g", result.approx_values[v]);
      std::cout << buf;
    } else {
      std::cout << fmt(result.values[v]);
    }
    std::cout << "\n";
  }
  print_strategy(game.arena, result.eve, "eve strategy");
  print_strategy(game.arena, result.adam, "adam strategy");
  std::cout << "iterations: " << result.iterations << "\n";
  if (!result.converged) {
    std::cout << "did not converge within " << max_iters << " iterations\n";
    return kCheckFailed;
  }
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& alpha_spec,
               std::uint64_t cap) {
  spg::Game game = spg::load_game(path);
  const auto& parity = require_parity(game, "verify");
  spg::AlphaSchedule alpha = resolve_alpha(alpha_spec, game.arena);
  spg::TransferReport report =
      spg::verify_transfer(game.arena, parity.priorities, alpha, {cap});
  std::cout << "ssg-optimal strategies: " << report.eve_optimal_count
            << " for eve, " << report.adam_optimal_count << " for adam\n";
  for (spg::VertexId v = 0; v < game.arena.size(); ++v) {
    std::cout << vertex_display(game.arena, v)
              << ": spg value = " << fmt(report.spg_values[v])
              << ", ssg value = " << fmt(report.ssg_values[2 * v]) << "\n";
  }
  if (report.holds) {
    std::cout << "transfer holds: every ssg-optimal strategy is "
                 "spg-optimal\n";
    return kOk;
  }
  std::cout << "transfer FAILS for " << report.failures.size()
            << " strategie(s):\n";
  for (const auto& f : report.failures) {
    print_strategy(game.arena, f.strategy,
                   f.player == spg::Owner::kEve ? "  eve" : "  adam");
    for (spg::VertexId v = 0; v < game.arena.size(); ++v) {
      if (f.original_best[v] != report.spg_values[v]) {
        std::cout << "    at " << vertex_display(game.arena, v)
                  << ": guarantees " << fmt(f.original_best[v])
                  << " in the spg, optimum is " << fmt(report.spg_values[v])
                  << "\n";
      }
    }
  }
  return kCheckFailed;
}

int cmd_separation(const std::string& path, std::uint64_t cap) {
  spg::Game game = spg::load_game(path);
  const auto& parity = require_parity(game, "separation");
  spg::SeparationReport report =
      spg::separation_check(game.arena, parity.priorities, {cap});
  std::cout << "strategy pairs: " << report.pair_count << "\n";
  std::cout << "epsilon       : " << fmt(report.epsilon) << "\n";
  if (report.min_nonzero_gap) {
    std::cout << "min gap       : " << fmt(*report.min_nonzero_gap) << "\n";
  } else {
    std::cout << "min gap       : none (all values equal)\n";
  }
  if (report.holds) {
    std::cout << "separation holds\n";
    return kOk;
  }
  std::cout << "separation FAILS at " << report.violations.size()
            << " vertex value pair(s)\n";
  return kCheckFailed;
}

int cmd_worst_case(std::size_t m, const std::string& s_text,
                   const std::string& alpha_text, const std::string& out) {
  auto s = spg::Rational::parse(s_text);
  auto alpha = spg::Rational::parse(alpha_text);
  if (!s || !alpha) {
    std::cerr << "cannot parse --s / --alpha as exact rationals\n";
    return kUsageError;
  }
  spg::MarkovChain mc = spg::worst_case_mc(m, *s, *alpha);
  spg::Arena arena = mc.as_arena();
  for (spg::VertexId i = 0; i < m; ++i) {
    arena.vertices[i].label = "v" + std::to_string(i + 1);
  }
  arena.vertices[m].label = "vf";
  arena.vertices[m + 1].label = "vb";
  arena.vertices[m + 2].label = "vs";
  spg::Game game{std::move(arena),
                 spg::ReachabilityObjective{{static_cast<spg::VertexId>(m + 1)}}};
  spg::save_game(out, game);
  spg::Rational bound = spg::sink_reach_lower_bound(
      m, *s, spg::Rational(1) - *alpha - *s, *s, *alpha);
  std::cout << "wrote " << out << "; reach(vb) from v1 = " << fmt(bound)
            << "\n";
  return kOk;
}

int cmd_export_dot(const std::string& path) {
  spg::Game game = spg::load_game(path);
  std::cout << spg::export_dot(game);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic parity game toolkit: exact solving and the "
               "gadget reduction to simple stochastic games"};
  app.require_subcommand(1);

  std::string file, out, alpha_spec = "default", method = "oracle";
  double tol = 1e-10;
  std::size_t max_iters = 1'000'000;
  std::uint64_t cap = 1'000'000;
  std::size_t m = 1;
  std::string s_text, alpha_text;
  bool approx = false;

  auto* validate = app.add_subcommand("validate", "Check a game file");
  validate->add_option("file", file)->required();

  auto* bounds = app.add_subcommand(
      "bounds", "Print n, M, delta_min, epsilon and every derived threshold");
  bounds->add_option("file", file)->required();

  auto* reduce = app.add_subcommand(
      "reduce", "Transform a parity game into a reachability game");
  reduce->add_option("file", file)->required();
  reduce->add_option("--out", out, "Output game file")->required();
  reduce->add_option("--alpha", alpha_spec,
                     "\"default\" or a schedule file {\"alpha\": [..]}");
  reduce->add_flag("--approx", approx,
                   "Add decimal probability hints to the output");

  auto* solve = app.add_subcommand("solve", "Solve a game");
  solve->add_option("file", file)->required();
  solve->add_option("--method", method, "oracle, vi or si");
  solve->add_option("--tol", tol, "Value iteration tolerance");
  solve->add_option("--max-iters", max_iters, "Value iteration cap");
  solve->add_option("--cap", cap, "Oracle strategy pair cap");

  auto* verify = app.add_subcommand(
      "verify", "Check optimality transfer from the reduced game");
  verify->add_option("file", file)->required();
  verify->add_option("--alpha", alpha_spec,
                     "\"default\" or a schedule file {\"alpha\": [..]}");
  verify->add_option("--cap", cap, "Strategy pair cap");

  auto* separation = app.add_subcommand(
      "separation", "Check the minimum gap between strategy-pair values");
  separation->add_option("file", file)->required();
  separation->add_option("--cap", cap, "Strategy pair cap");

  auto* worst = app.add_subcommand(
      "worst-case", "Emit the chain on which the sink-reachability bound is "
                    "tight");
  worst->add_option("--m", m, "Number of line states")->required();
  worst->add_option("--s", s_text, "Forward probability, e.g. 1/4")->required();
  worst->add_option("--alpha", alpha_text, "Sink probability, e.g. 1/8")
      ->required();
  worst->add_option("--out", out, "Output game file")->required();

  auto* dot = app.add_subcommand("export-dot", "Print a Graphviz view");
  dot->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      return app.exit(e);
    }
    app.exit(e);
    return kUsageError;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (bounds->parsed()) return cmd_bounds(file);
    if (reduce->parsed()) return cmd_reduce(file, out, alpha_spec, approx);
    if (solve->parsed()) return cmd_solve(file, method, tol, max_iters, cap);
    if (verify->parsed()) return cmd_verify(file, alpha_spec, cap);
    if (separation->parsed()) return cmd_separation(file, cap);
    if (worst->parsed()) return cmd_worst_case(m, s_text, alpha_text, out);
    if (dot->parsed()) return cmd_export_dot(file);
  } catch (const spg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const spg::SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const spg::DeltaMinTooLarge& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const spg::ArenaHasNoRandomTransitions& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const spg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
