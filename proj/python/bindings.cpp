// Copyright 2026 The osgame Authors
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

// Python bindings. Records cross the boundary as their JSON text; the
// package's __init__ turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "osgame/analysis/metrics.hpp"
#include "osgame/analysis/transforms.hpp"
#include "osgame/arena/match.hpp"
#include "osgame/arena/meta_game.hpp"
#include "osgame/arena/records.hpp"
#include "osgame/arena/tournament.hpp"
#include "osgame/cli/app.hpp"
#include "osgame/evolution/fixed_points.hpp"
#include "osgame/evolution/payoff_matrix.hpp"
#include "osgame/evolution/replicator.hpp"
#include "osgame/oracle/labeler.hpp"
#include "osgame/slang/renderer.hpp"

namespace py = pybind11;
using namespace osg;

namespace {

games::GameKind game_of(const std::string& name) {
  const auto g = games::parse_game_name(name);
  if (!g) throw py::value_error("unknown game '" + name + "' (expected ipd or coin)");
  return *g;
}

slang::StrategyProgram program(const std::string& source, games::GameKind game,
                               const std::string& origin) {
  try {
    return slang::load_program({source, origin}, game);
  } catch (const slang::ProgramError& e) {
    throw py::value_error(e.what());
  }
}

arena::MatchConfig config(const std::string& game, int rounds, std::uint64_t seed,
                          const std::string& fallback, int board_size) {
  arena::MatchConfig cfg;
  cfg.game = game_of(game);
  cfg.rounds = rounds;
  cfg.seed = seed;
  cfg.fallback = fallback;
  cfg.board_size = board_size;
  try {
    cfg.check();
  } catch (const std::invalid_argument& e) {
    throw py::value_error(e.what());
  }
  return cfg;
}

evolution::Matrix matrix(const std::vector<std::vector<double>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  evolution::Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != n) {
      throw py::value_error("payoff matrix must be square");
    }
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return a;
}

std::vector<std::string> default_tags(std::size_t n) {
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < n; ++i) tags.push_back("T" + std::to_string(i));
  return tags;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "osgame engine core";

  m.def("check_program",
        [](const std::string& source, const std::string& game) {
          program(source, game_of(game), "<python>");
        },
        py::arg("source"), py::arg("game") = "ipd",
        "Raise ValueError with diagnostics if the source is not a valid program.");

  m.def("play_match",
        [](const std::string& a, const std::string& b, const std::string& game, int rounds,
           std::uint64_t seed, const std::string& fallback, int board_size) {
          const auto cfg = config(game, rounds, seed, fallback, board_size);
          const auto rec = arena::play_match(program(a, cfg.game, "A"), program(b, cfg.game, "B"), cfg);
          return arena::dump(arena::to_json(rec));
        },
        py::arg("source_a"), py::arg("source_b"), py::arg("game") = "ipd",
        py::arg("rounds") = 10, py::arg("seed") = 0, py::arg("fallback") = "",
        py::arg("board_size") = games::kDefaultBoardSize);

  m.def("meta_game",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b, int meta_rounds,
           const std::string& game, int rounds, std::uint64_t seed) {
          arena::ScriptedProvider pa("A", "", a);
          arena::ScriptedProvider pb("B", "", b);
          const auto cfg = config(game, rounds, seed, "", games::kDefaultBoardSize);
          try {
            return arena::dump(arena::to_json(arena::run_meta_game(pa, pb, meta_rounds, cfg)));
          } catch (const arena::MetaGameAbort& e) {
            throw py::value_error(e.what());
          }
        },
        py::arg("sources_a"), py::arg("sources_b"), py::arg("meta_rounds") = 10,
        py::arg("game") = "ipd", py::arg("rounds") = 10, py::arg("seed") = 0);

  m.def("metrics",
        [](const std::string& source, const std::string& game) {
          return analysis::metrics_to_json(
              analysis::compute_metrics(program(source, game_of(game), "<python>").tree));
        },
        py::arg("source"), py::arg("game") = "ipd");

  m.def("transform",
        [](const std::string& mode, const std::string& source, std::uint64_t seed,
           const std::string& game) -> py::tuple {
          const auto p = program(source, game_of(game), "<python>");
          if (mode == "strip") {
            return py::make_tuple(analysis::strip_comments(p.source).text,
                                  std::vector<std::pair<std::string, std::string>>{});
          }
          std::pair<slang::SyntaxTree, analysis::RenameMap> result;
          if (mode == "mask") {
            result = analysis::mask(p.tree);
          } else if (mode == "obfuscate") {
            Rng rng(seed);
            result = analysis::obfuscate(p.tree, rng);
          } else {
            throw py::value_error("mode must be strip, mask or obfuscate");
          }
          std::vector<std::pair<std::string, std::string>> renames = result.second.entries();
          return py::make_tuple(slang::render(result.first), renames);
        },
        py::arg("mode"), py::arg("source"), py::arg("seed") = 0, py::arg("game") = "ipd",
        "Returns (text, rename pairs).");

  m.def("label",
        [](const std::string& source, int rounds, std::uint64_t seed) {
          const auto label =
              oracle::label_cooperative(program(source, games::GameKind::kIpd, "<python>"), rounds, seed);
          return arena::dump(oracle::to_json(label));
        },
        py::arg("source"), py::arg("rounds") = oracle::kLabelRounds, py::arg("seed") = 0);

  m.def("tournament",
        [](const std::vector<std::pair<std::string, std::string>>& types, const std::string& game,
           int rounds, std::uint64_t seed, int repetitions, int jobs) {
          const auto cfg = config(game, rounds, seed, "", games::kDefaultBoardSize);
          std::vector<arena::TypedProgram> typed;
          for (const auto& [tag, src] : types) typed.push_back({tag, program(src, cfg.game, tag)});
          try {
            return arena::dump(arena::to_json(arena::round_robin(typed, cfg, repetitions, jobs)));
          } catch (const std::invalid_argument& e) {
            throw py::value_error(e.what());
          }
        },
        py::arg("types"), py::arg("game") = "ipd", py::arg("rounds") = 10, py::arg("seed") = 0,
        py::arg("repetitions") = 1, py::arg("jobs") = 1);

  m.def("integrate",
        [](const std::vector<std::vector<double>>& a, const std::vector<double>& x0, double dt,
           int steps, const std::string& method) {
          if (method != "rk4" && method != "euler") throw py::value_error("method must be rk4 or euler");
          evolution::Vector x = Eigen::Map<const evolution::Vector>(x0.data(), static_cast<Eigen::Index>(x0.size()));
          try {
            const auto traj = evolution::integrate(
                matrix(a), x, dt, steps,
                method == "rk4" ? evolution::Method::kRk4 : evolution::Method::kEuler);
            std::vector<std::vector<double>> out;
            for (const auto& s : traj.states) out.emplace_back(s.data(), s.data() + s.size());
            return out;
          } catch (const std::invalid_argument& e) {
            throw py::value_error(e.what());
          }
        },
        py::arg("matrix"), py::arg("x0"), py::arg("dt") = 0.01, py::arg("steps") = 1000,
        py::arg("method") = "rk4", "States x(0), x(dt), ... as lists.");

  m.def("fixed_points",
        [](const std::vector<std::vector<double>>& a, double tol) {
          const auto mat = matrix(a);
          try {
            return arena::dump(evolution::to_json(evolution::fixed_points(mat, tol),
                                                  default_tags(a.size())));
          } catch (const std::invalid_argument& e) {
            throw py::value_error(e.what());
          }
        },
        py::arg("matrix"), py::arg("tol") = 1e-9);

  m.def("flow_field",
        [](const std::vector<std::vector<double>>& a, int resolution) {
          const auto mat = matrix(a);
          try {
            return arena::dump(evolution::to_json(evolution::flow_field(mat, resolution),
                                                  default_tags(a.size())));
          } catch (const std::invalid_argument& e) {
            throw py::value_error(e.what());
          }
        },
        py::arg("matrix"), py::arg("resolution") = 10);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::vector<const char*> argv{"osgame"};
          for (const auto& a : args) argv.push_back(a.c_str());
          std::ostringstream out;
          std::ostringstream err;
          int code = 0;
          {
            py::gil_scoped_release release;
            code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
          }
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in process: (exit code, stdout, stderr).");
}
