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

#include "osgame/cli/app.hpp"

#include <CLI11.hpp>

#include "osgame/cli/commands.hpp"
#include "osgame/cli/run_dir.hpp"

#ifndef OSGAME_VERSION
#define OSGAME_VERSION "0.0.0"
#endif

namespace osg::cli {

namespace {

void add_game_flags(CLI::App* cmd, GameOptions& g, bool with_out = true) {
  cmd->add_option("--game", g.game, "ipd or coin");
  cmd->add_option("--rounds", g.rounds, "IPD rounds or Coin Game steps");
  cmd->add_option("--steps", g.rounds, "alias of --rounds for the Coin Game");
  cmd->add_option("--seed", g.seed, "base seed");
  cmd->add_option("--payoff", g.payoff, "IPD payoffs T,R,P,S");
  cmd->add_option("--step-limit", g.step_limit, "interpreter steps per decision");
  cmd->add_option("--call-depth", g.call_depth, "maximum call depth");
  cmd->add_option("--list-cap", g.list_cap, "maximum list length");
  cmd->add_option("--fallback", g.fallback, "action substituted for a faulting program");
  cmd->add_option("--board-size", g.board_size, "Coin Game board side");
  cmd->add_option("--config", g.config_file, "JSON config; flags override it");
  cmd->add_option("--jobs", g.jobs, "worker threads");
  if (with_out) {
    cmd->add_option("--out", g.out,
                    std::string("run directory (default: $") + kOutDirEnv +
                        " or ./osgame-runs, one subdirectory per config)");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"osgame: open-source program games"};
  app.set_version_flag("--version", std::string(OSGAME_VERSION));
  app.require_subcommand(1);

  MatchOptions match;
  auto* c_match = app.add_subcommand("match", "play two programs against each other");
  add_game_flags(c_match, match.game);
  c_match->add_option("programs", match.programs, "program A and program B");

  MetaOptions meta;
  auto* c_meta = app.add_subcommand("meta", "run the repeated open-source game");
  add_game_flags(c_meta, meta.game);
  c_meta->add_option("--a", meta.provider_a,
                     "provider A: static:FILE, scripted:F1,F2,... or external:'CMD ARGS'");
  c_meta->add_option("--b", meta.provider_b, "provider B, same forms as --a");
  c_meta->add_option("--tag-a", meta.tag_a, "label for provider A (e.g. CPM, DPM, PM)");
  c_meta->add_option("--tag-b", meta.tag_b, "label for provider B");
  c_meta->add_option("--meta-rounds", meta.meta_rounds, "meta-rounds per run (default 10)");
  c_meta->add_option("--seeds", meta.seeds, "independent runs, seeds seed..seed+n-1");
  c_meta->add_option("--judge", meta.judge, "external judge command");
  c_meta->add_option("--judge-labels", meta.judge_labels, "judge-label sidecar JSON to merge");
  c_meta->add_option("--timeout", meta.timeout, "per-message agent timeout in seconds");

  LabelOptions label;
  auto* c_label = app.add_subcommand("label", "label a corpus against a pure cooperator");
  add_game_flags(c_label, label.game);
  c_label->add_option("dir", label.dir, "directory of .slang files");
  c_label->add_flag("--variants", label.variants, "also emit masked and obfuscated corpora");
  c_label->add_option("--trials", label.trials, "report the cooperative fraction over k seeds");

  MetricsOptions metrics;
  auto* c_metrics = app.add_subcommand("metrics", "cyclomatic, Halstead and OSAS metrics");
  c_metrics->add_option("file", metrics.file, "program file")->required();
  c_metrics->add_option("--game", metrics.game, "ipd or coin");
  c_metrics->add_option("--format", metrics.format, "json or csv");

  TransformOptions transform;
  auto* c_transform = app.add_subcommand("transform", "strip comments, mask or obfuscate");
  c_transform->add_option("mode", transform.mode, "strip, mask or obfuscate")->required();
  c_transform->add_option("file", transform.file, "program file")->required();
  c_transform->add_option("--game", transform.game, "ipd or coin");
  c_transform->add_option("--seed", transform.seed, "seed for obfuscated names");
  c_transform->add_option("--output,-o", transform.output, "write here instead of stdout");
  c_transform->add_option("--map", transform.map, "write the rename map as JSON");

  TournamentOptions tournament;
  auto* c_tournament = app.add_subcommand("tournament", "round-robin mean-payoff table");
  add_game_flags(c_tournament, tournament.game);
  c_tournament->add_option("programs", tournament.programs, "program files");
  c_tournament->add_option("--repetitions", tournament.repetitions, "matches per ordered pair");

  EvolveOptions evolve;
  auto* c_evolve = app.add_subcommand("evolve", "replicator dynamics over strategy types");
  add_game_flags(c_evolve, evolve.game);
  c_evolve->add_option("programs", evolve.programs, "program files (one type each)");
  c_evolve->add_option("--matrix", evolve.matrix, "payoff matrix JSON instead of programs");
  c_evolve->add_option("--x0", evolve.x0, "initial population, e.g. 1,0,0 (default uniform)");
  c_evolve->add_option("--dt", evolve.dt, "integration step (default 0.01)");
  c_evolve->add_option("--integration-steps", evolve.steps, "number of steps (default 20000)");
  c_evolve->add_option("--method", evolve.method, "rk4 or euler");
  c_evolve->add_option("--resolution", evolve.resolution, "flow grid resolution (default 10)");
  c_evolve->add_option("--repetitions", evolve.repetitions, "matches per ordered pair");

  EvolveOptions flow;
  flow.flow_only = true;
  auto* c_flow = app.add_subcommand("flow", "replicator flow field on the 2-simplex");
  add_game_flags(c_flow, flow.game);
  c_flow->add_option("programs", flow.programs, "three program files");
  c_flow->add_option("--matrix", flow.matrix, "payoff matrix JSON instead of programs");
  c_flow->add_option("--resolution", flow.resolution, "grid resolution (default 10)");
  c_flow->add_option("--repetitions", flow.repetitions, "matches per ordered pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << OSGAME_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (c_match->parsed()) return cmd_match(match, out, err);
    if (c_meta->parsed()) return cmd_meta(meta, out, err);
    if (c_label->parsed()) return cmd_label(label, out, err);
    if (c_metrics->parsed()) return cmd_metrics(metrics, out, err);
    if (c_transform->parsed()) return cmd_transform(transform, out, err);
    if (c_tournament->parsed()) return cmd_tournament(tournament, out, err);
    if (c_evolve->parsed()) return cmd_evolve(evolve, out, err);
    if (c_flow->parsed()) return cmd_evolve(flow, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace osg::cli
