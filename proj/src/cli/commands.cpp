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

#include "osgame/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <set>
#include <sstream>

#include "osgame/analysis/metrics.hpp"
#include "osgame/analysis/transforms.hpp"
#include "osgame/arena/meta_game.hpp"
#include "osgame/arena/records.hpp"
#include "osgame/arena/tournament.hpp"
#include "osgame/cli/run_dir.hpp"
#include "osgame/evolution/fixed_points.hpp"
#include "osgame/evolution/payoff_matrix.hpp"
#include "osgame/oracle/labeler.hpp"
#include "osgame/slang/renderer.hpp"

namespace osg::cli {

namespace fs = std::filesystem;
using arena::Json;
using games::GameKind;

namespace {

const std::set<std::string> kMatchKeys = {"game",     "rounds", "payoff",    "budget",
                                          "fallback", "seed",   "board_size"};

Json read_json_file(const std::string& path) {
  std::string text;
  try {
    text = slang::read_text_file(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw UsageError(path + ": not valid JSON");
  return j;
}

GameKind parse_game(const std::string& name) {
  auto g = games::parse_game_name(name);
  if (!g) throw UsageError("unknown game '" + name + "' (expected ipd or coin)");
  return *g;
}

games::PayoffParams parse_payoff(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--payoff expects four integers T,R,P,S");
    }
  }
  if (v.size() != 4) throw UsageError("--payoff expects four integers T,R,P,S");
  return {v[0], v[1], v[2], v[3]};
}

// Effective settings of one invocation: config file first, flags on top.
struct Resolved {
  arena::MatchConfig cfg;
  Json extras = Json::object();  // command-specific keys from the config file
  int jobs = 1;
  std::optional<fs::path> out;
};

Resolved resolve(const GameOptions& g, const std::set<std::string>& extra_keys,
                 int default_rounds = 10) {
  Resolved r;
  r.cfg.rounds = default_rounds;
  if (g.config_file) {
    const Json file = read_json_file(*g.config_file);
    if (!file.is_object()) throw UsageError(*g.config_file + ": config must be a JSON object");
    Json match = Json::object();
    for (const auto& [k, v] : file.items()) {
      if (kMatchKeys.count(k)) match[k] = v;
      else if (k == "jobs") r.jobs = v.get<int>();
      else if (extra_keys.count(k)) r.extras[k] = v;
      else throw UsageError(*g.config_file + ": unknown config key '" + k + "'");
    }
    try {
      r.cfg = arena::match_config_from_json(match, r.cfg);
    } catch (const std::exception& e) {
      throw UsageError(*g.config_file + ": " + e.what());
    }
  }
  if (g.game) {
    const GameKind kind = parse_game(*g.game);
    if (kind != r.cfg.game && !g.fallback) r.cfg.fallback.clear();
    r.cfg.game = kind;
  }
  if (g.rounds) r.cfg.rounds = *g.rounds;
  if (g.payoff) r.cfg.payoff = parse_payoff(*g.payoff);
  if (g.step_limit) r.cfg.budget.step_limit = *g.step_limit;
  if (g.call_depth) r.cfg.budget.call_depth_limit = *g.call_depth;
  if (g.list_cap) r.cfg.budget.list_length_cap = *g.list_cap;
  if (g.fallback) r.cfg.fallback = *g.fallback;
  if (g.seed) r.cfg.seed = *g.seed;
  if (g.board_size) r.cfg.board_size = *g.board_size;
  if (g.jobs) r.jobs = *g.jobs;
  if (r.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (g.out) r.out = fs::path(*g.out);
  try {
    r.cfg.check();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  r.cfg.fallback = r.cfg.resolved_fallback();
  return r;
}

template <typename T>
T pick(const std::optional<T>& flag, const Json& extras, const char* key, T def) {
  if (flag) return *flag;
  if (extras.contains(key)) {
    try {
      return extras[key].get<T>();
    } catch (const nlohmann::json::exception&) {
      throw UsageError(std::string("config key '") + key + "' has the wrong type");
    }
  }
  return def;
}

std::vector<std::string> pick_files(const std::vector<std::string>& flag, const Json& extras) {
  if (!flag.empty()) return flag;
  if (extras.contains("programs")) return extras["programs"].get<std::vector<std::string>>();
  return {};
}

slang::StrategyProgram load(const std::string& path, GameKind game) {
  if (!fs::exists(path)) throw UsageError("no such file: " + path);
  try {
    return slang::load_program_file(path, game);
  } catch (const slang::ProgramError& e) {
    throw UsageError(e.what());
  } catch (const std::exception& e) {
    throw UsageError(std::string(e.what()));
  }
}

Json base_config(const Resolved& r) {
  Json j = arena::to_json(r.cfg);
  if (r.jobs != 1) j["jobs"] = r.jobs;
  return j;
}

std::string tag_for(const std::string& path) { return fs::path(path).stem().string(); }

}  // namespace

int cmd_match(const MatchOptions& o, std::ostream& out, std::ostream&) {
  Resolved r = resolve(o.game, {"programs"});
  const auto files = pick_files(o.programs, r.extras);
  if (files.size() != 2) throw UsageError("match needs exactly two program files");
  const auto a = load(files[0], r.cfg.game);
  const auto b = load(files[1], r.cfg.game);

  Json config = base_config(r);
  config["programs"] = files;
  RunDir dir("match", config, r.out);
  dir.add_input(files[0]);
  dir.add_input(files[1]);
  const arena::MatchRecord rec = arena::play_match(a, b, r.cfg);
  const fs::path path = dir.write("record.json", arena::dump(arena::to_json(rec)));
  dir.finish();

  out << "totals " << rec.total_a << " " << rec.total_b << "\n";
  if (!rec.faults.empty()) out << "faults " << rec.faults.size() << "\n";
  out << "record " << path.string() << "\n";
  return rec.faults.empty() ? kExitOk : kExitDomain;
}

namespace {

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> words;
  std::istringstream in(s);
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::unique_ptr<arena::Provider> make_provider(const std::string& spec, const std::string& id,
                                               const std::string& tag, GameKind game,
                                               std::chrono::milliseconds timeout,
                                               RunDir& dir) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw UsageError("provider spec '" + spec + "' must be static:, scripted: or external:");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  auto read_source = [&](const std::string& path) {
    load(path, game);  // reject invalid files up front
    dir.add_input(path);
    return slang::read_text_file(path);
  };
  if (kind == "static") return std::make_unique<arena::StaticProvider>(id, tag, read_source(rest));
  if (kind == "scripted") {
    std::vector<std::string> sources;
    std::stringstream ss(rest);
    for (std::string p; std::getline(ss, p, ',');) sources.push_back(read_source(p));
    if (sources.empty()) throw UsageError("scripted provider needs at least one file");
    return std::make_unique<arena::ScriptedProvider>(id, tag, std::move(sources));
  }
  if (kind == "external") {
    auto argv = split_words(rest);
    if (argv.empty()) throw UsageError("external provider needs a command");
    return std::make_unique<arena::ExternalProvider>(id, tag, std::move(argv), timeout);
  }
  throw UsageError("unknown provider kind '" + kind + "'");
}

}  // namespace

int cmd_meta(const MetaOptions& o, std::ostream& out, std::ostream& err) {
  Resolved r = resolve(o.game, {"provider_a", "provider_b", "tag_a", "tag_b", "meta_rounds",
                                "seeds", "judge", "judge_labels", "timeout"});
  const std::string spec_a = pick<std::string>(o.provider_a, r.extras, "provider_a", "");
  const std::string spec_b = pick<std::string>(o.provider_b, r.extras, "provider_b", "");
  if (spec_a.empty() || spec_b.empty()) throw UsageError("meta needs --a and --b provider specs");
  const std::string tag_a = pick<std::string>(o.tag_a, r.extras, "tag_a", "PM");
  const std::string tag_b = pick<std::string>(o.tag_b, r.extras, "tag_b", "PM");
  const int meta_rounds = pick(o.meta_rounds, r.extras, "meta_rounds", 10);
  const int seeds = pick(o.seeds, r.extras, "seeds", 1);
  const double timeout_s = pick(o.timeout, r.extras, "timeout", 60.0);
  const std::string judge_cmd = pick<std::string>(o.judge, r.extras, "judge", "");
  const std::string sidecar = pick<std::string>(o.judge_labels, r.extras, "judge_labels", "");
  if (meta_rounds < 1) throw UsageError("--meta-rounds must be at least 1");
  if (seeds < 1) throw UsageError("--seeds must be at least 1");
  if (!(timeout_s > 0)) throw UsageError("--timeout must be positive");
  if (!sidecar.empty() && seeds != 1) throw UsageError("--judge-labels needs --seeds 1");
  const auto timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000));

  Json config = base_config(r);
  config["provider_a"] = spec_a;
  config["provider_b"] = spec_b;
  config["tag_a"] = tag_a;
  config["tag_b"] = tag_b;
  config["meta_rounds"] = meta_rounds;
  config["seeds"] = seeds;
  config["timeout"] = timeout_s;
  if (!judge_cmd.empty()) config["judge"] = judge_cmd;
  if (!sidecar.empty()) config["judge_labels"] = sidecar;
  RunDir dir("meta", config, r.out);
  if (!sidecar.empty()) dir.add_input(sidecar);

  bool faulted = false;
  for (int s = 0; s < seeds; ++s) {
    arena::MatchConfig cfg = r.cfg;
    cfg.seed = r.cfg.seed + static_cast<std::uint64_t>(s);
    auto a = make_provider(spec_a, "A", tag_a, cfg.game, timeout, dir);
    auto b = make_provider(spec_b, "B", tag_b, cfg.game, timeout, dir);
    std::unique_ptr<arena::ExternalJudge> judge;
    arena::MetaGameRecord rec;
    try {
      if (!judge_cmd.empty()) {
        judge = std::make_unique<arena::ExternalJudge>(split_words(judge_cmd), cfg.game, timeout);
      }
      rec = arena::run_meta_game(*a, *b, meta_rounds, cfg, judge.get());
    } catch (const arena::ProtocolError& e) {
      err << "error: agent handshake failed: " << e.what() << "\n";
      for (const auto& line : e.transcript()) err << "  " << line << "\n";
      return kExitUsage;
    } catch (const arena::MetaGameAbort& e) {
      err << "error: " << e.what() << "\n";
      return kExitDomain;
    }
    if (!sidecar.empty()) {
      try {
        arena::merge_judge_labels(rec, slang::read_text_file(sidecar));
      } catch (const std::exception& e) {
        throw UsageError(sidecar + ": " + e.what());
      }
    }
    int total_a = 0;
    int total_b = 0;
    for (const auto& round : rec.rounds) {
      total_a += round.match.total_a;
      total_b += round.match.total_b;
      faulted = faulted || !round.provider_faults.empty() || !round.match.faults.empty();
    }
    const std::string name = "meta-seed-" + std::to_string(cfg.seed) + ".json";
    dir.write(name, arena::dump(arena::to_json(rec)));
    out << "seed " << cfg.seed << " totals " << total_a << " " << total_b << "\n";
  }
  dir.finish();
  out << "run " << dir.path().string() << "\n";
  return faulted ? kExitDomain : kExitOk;
}

int cmd_label(const LabelOptions& o, std::ostream& out, std::ostream& err) {
  Resolved r = resolve(o.game, {"dir", "variants", "trials"});
  if (r.cfg.game != GameKind::kIpd) throw UsageError("labeling is defined for the ipd only");
  const std::string dirname = o.dir.empty() ? pick<std::string>(std::nullopt, r.extras, "dir", "")
                                            : o.dir;
  if (dirname.empty()) throw UsageError("label needs a corpus directory");
  if (!fs::is_directory(dirname)) throw UsageError("not a directory: " + dirname);
  const bool variants = o.variants || pick<bool>(std::nullopt, r.extras, "variants", false);
  const int trials = pick(o.trials, r.extras, "trials", 0);
  if (trials < 0) throw UsageError("--trials must be non-negative");

  std::vector<std::string> errors;
  const auto corpus = oracle::load_corpus(dirname, errors);
  for (const auto& e : errors) err << e << "\n";

  Json config = base_config(r);
  config["dir"] = dirname;
  config["variants"] = variants;
  if (trials > 0) config["trials"] = trials;
  RunDir dir("label", config, r.out);
  for (const auto& entry : corpus) dir.add_input(entry.program.source.origin);

  std::vector<oracle::BenchmarkItem> items;
  if (variants) {
    items = oracle::build_benchmark(corpus, r.cfg.seed, r.cfg.rounds, r.jobs);
  } else {
    items.resize(corpus.size());
    arena::parallel_for(corpus.size(), r.jobs, [&](std::size_t i) {
      const auto& p = corpus[i].program;
      items[i] = {corpus[i].id, oracle::Variant::kUnmasked, p.source,
                  oracle::label_cooperative(p, r.cfg.rounds, r.cfg.seed),
                  oracle::is_stochastic(p.tree)};
    });
  }
  Json manifest = oracle::labels_manifest(items, r.cfg.seed, r.cfg.rounds);
  if (trials > 0) {
    std::vector<double> fractions(corpus.size());
    arena::parallel_for(corpus.size(), r.jobs, [&](std::size_t i) {
      fractions[i] =
          oracle::cooperative_fraction(corpus[i].program, trials, r.cfg.rounds, r.cfg.seed);
    });
    const std::size_t per = variants ? 3 : 1;
    for (std::size_t k = 0; k < items.size(); ++k) {
      manifest["items"][k]["cooperative_fraction"] = fractions[k / per];
    }
  }
  if (variants) {
    for (const auto& item : items) {
      dir.write(std::string(oracle::variant_name(item.variant)) + "/" + item.id + ".slang",
                item.source.text);
    }
  }
  dir.write("labels.json", arena::dump(manifest));
  dir.finish();

  const auto& summary = manifest["summary"];
  out << "programs " << summary["programs"].get<int>() << " cooperative "
      << summary["cooperative"].get<int>() << " stochastic "
      << summary["stochastic"].get<int>() << "\n";
  out << "run " << dir.path().string() << "\n";
  return errors.empty() ? kExitOk : kExitDomain;
}

int cmd_metrics(const MetricsOptions& o, std::ostream& out, std::ostream&) {
  const auto p = load(o.file, parse_game(o.game));
  const auto report = analysis::compute_metrics(p.tree);
  if (o.format == "json") {
    out << analysis::metrics_to_json(report) << "\n";
  } else if (o.format == "csv") {
    out << analysis::metrics_csv_header() << "\n" << analysis::metrics_to_csv_row(report) << "\n";
  } else {
    throw UsageError("--format must be json or csv");
  }
  return kExitOk;
}

int cmd_transform(const TransformOptions& o, std::ostream& out, std::ostream&) {
  const GameKind game = parse_game(o.game);
  std::string text;
  analysis::RenameMap map;
  if (o.mode == "strip") {
    if (!fs::exists(o.file)) throw UsageError("no such file: " + o.file);
    load(o.file, game);
    text = analysis::strip_comments({slang::read_text_file(o.file), o.file}).text;
  } else if (o.mode == "mask" || o.mode == "obfuscate") {
    const auto p = load(o.file, game);
    Rng rng(o.seed);
    auto [tree, m] = o.mode == "mask" ? analysis::mask(p.tree) : analysis::obfuscate(p.tree, rng);
    text = slang::render(tree);
    map = std::move(m);
  } else {
    throw UsageError("transform mode must be strip, mask or obfuscate");
  }
  if (o.output) {
    arena::write_file_atomic(*o.output, text);
  } else {
    out << text;
  }
  if (o.map) {
    Json j = Json::object();
    for (const auto& [from, to] : map.entries()) j[from] = to;
    arena::write_file_atomic(*o.map, arena::dump(j));
  }
  return kExitOk;
}

int cmd_tournament(const TournamentOptions& o, std::ostream& out, std::ostream&) {
  Resolved r = resolve(o.game, {"programs", "repetitions"});
  const auto files = pick_files(o.programs, r.extras);
  if (files.size() < 2) throw UsageError("tournament needs at least two program files");
  const int reps = pick(o.repetitions, r.extras, "repetitions", 1);
  if (reps < 1) throw UsageError("--repetitions must be at least 1");
  std::vector<arena::TypedProgram> types;
  for (const auto& f : files) types.push_back({tag_for(f), load(f, r.cfg.game)});

  Json config = base_config(r);
  config["programs"] = files;
  config["repetitions"] = reps;
  RunDir dir("tournament", config, r.out);
  for (const auto& f : files) dir.add_input(f);
  const auto table = arena::round_robin(types, r.cfg, reps, r.jobs);
  dir.write("tournament.json", arena::dump(arena::to_json(table)));
  dir.finish();

  for (std::size_t i = 0; i < table.tags.size(); ++i) {
    out << table.tags[i];
    for (double v : table.mean[i]) out << " " << v;
    out << "\n";
  }
  out << "run " << dir.path().string() << "\n";
  return kExitOk;
}

namespace {

evolution::Vector parse_x0(const std::string& text, Eigen::Index n) {
  std::vector<double> v;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--x0 expects comma-separated numbers");
    }
  }
  evolution::Vector x(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) x[static_cast<Eigen::Index>(i)] = v[i];
  if (x.size() != n) {
    throw UsageError("--x0 has " + std::to_string(x.size()) + " entries for " +
                     std::to_string(n) + " types");
  }
  if (!evolution::on_simplex(x)) throw UsageError("--x0 must be non-negative and sum to 1");
  return x;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

std::string fmt(const evolution::Vector& x) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) out += (i ? ", " : "") + fmt(x[i]);
  return out + ")";
}

}  // namespace

int cmd_evolve(const EvolveOptions& o, std::ostream& out, std::ostream&) {
  Resolved r = resolve(o.game, {"programs", "matrix", "x0", "dt", "steps", "method",
                                "resolution", "repetitions"},
                       evolution::kEvolutionRounds);
  const auto files = pick_files(o.programs, r.extras);
  const std::string matrix_file = pick<std::string>(o.matrix, r.extras, "matrix", "");
  const int reps = pick(o.repetitions, r.extras, "repetitions", 1);
  const int resolution = pick(o.resolution, r.extras, "resolution", 10);
  const double dt = pick(o.dt, r.extras, "dt", 0.01);
  const int steps = pick(o.steps, r.extras, "steps", 20000);
  const std::string method_name = pick<std::string>(o.method, r.extras, "method", "rk4");
  if (matrix_file.empty() == files.empty()) {
    throw UsageError("give either --matrix or program files, not both");
  }
  if (reps < 1) throw UsageError("--repetitions must be at least 1");
  if (!(dt > 0) || !std::isfinite(dt)) throw UsageError("--dt must be positive");
  if (steps < 0) throw UsageError("--steps must be non-negative");
  if (method_name != "rk4" && method_name != "euler") {
    throw UsageError("--method must be rk4 or euler");
  }

  evolution::PayoffMatrix m;
  Json config = base_config(r);
  if (!matrix_file.empty()) {
    try {
      m = evolution::payoff_matrix_from_json(read_json_file(matrix_file));
    } catch (const std::invalid_argument& e) {
      throw UsageError(matrix_file + ": " + e.what());
    }
    config["matrix"] = matrix_file;
  } else {
    if (files.size() < 2) throw UsageError("evolution needs at least two program files");
    std::vector<arena::TypedProgram> types;
    for (const auto& f : files) types.push_back({tag_for(f), load(f, r.cfg.game)});
    m = evolution::estimate_payoff_matrix(types, r.cfg, reps, r.jobs);
    config["programs"] = files;
    config["repetitions"] = reps;
  }
  const Eigen::Index n = m.size();
  const std::string x0_text = pick<std::string>(o.x0, r.extras, "x0", "");
  const evolution::Vector x0 = x0_text.empty()
                                   ? evolution::Vector::Constant(n, 1.0 / static_cast<double>(n))
                                   : parse_x0(x0_text, n);
  if (n == 3 && resolution < 2) throw UsageError("--resolution must be at least 2");
  config["resolution"] = resolution;
  if (!o.flow_only) {
    if (!x0_text.empty()) config["x0"] = x0_text;
    config["dt"] = dt;
    config["steps"] = steps;
    config["method"] = method_name;
  }

  RunDir dir(o.flow_only ? "flow" : "evolve", config, r.out);
  if (!matrix_file.empty()) dir.add_input(matrix_file);
  for (const auto& f : files) dir.add_input(f);
  dir.write("payoff_matrix.json", arena::dump(evolution::to_json(m)));

  if (n == 3) {
    const auto flow = evolution::flow_field(m.entries, resolution);
    dir.write("flow.csv", evolution::flow_csv(flow, m.tags));
    dir.write("flow.json", arena::dump(evolution::to_json(flow, m.tags)));
    out << "flow samples " << flow.size() << "\n";
  } else if (o.flow_only) {
    throw UsageError("flow fields need exactly 3 types");
  }
  if (!o.flow_only) {
    const auto method = method_name == "rk4" ? evolution::Method::kRk4 : evolution::Method::kEuler;
    const auto traj = evolution::integrate(m.entries, x0, dt, steps, method);
    dir.write("trajectory.csv", evolution::trajectory_csv(traj, m.tags));
    out << "final " << fmt(traj.states.back()) << "\n";
    if (n <= 3) {
      const auto fps = evolution::fixed_points(m.entries);
      dir.write("fixed_points.json", arena::dump(evolution::to_json(fps, m.tags)));
      for (const auto& p : fps.points) {
        out << "fixed " << evolution::support_kind_name(p.kind) << " " << fmt(p.x) << " "
            << evolution::stability_name(p.stability) << "\n";
      }
      for (const auto& c : fps.continua) {
        out << "continuum " << evolution::support_kind_name(c.kind);
        for (int i : c.support) out << " " << m.tags[static_cast<std::size_t>(i)];
        out << "\n";
      }
    }
  }
  dir.finish();
  out << "run " << dir.path().string() << "\n";
  return kExitOk;
}

}  // namespace osg::cli
