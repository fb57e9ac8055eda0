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

#include "osgame/oracle/labeler.hpp"

#include <algorithm>
#include <fstream>

#include "osgame/analysis/transforms.hpp"
#include "osgame/arena/tournament.hpp"
#include "osgame/slang/renderer.hpp"

namespace osg::oracle {

namespace fs = std::filesystem;
using arena::Json;
using games::GameKind;

namespace {

const slang::StrategyProgram& cooperator() {
  static const slang::StrategyProgram p =
      slang::load_program({std::string(kCooperatorSource), "<cooperator>"}, GameKind::kIpd);
  return p;
}

constexpr std::uint64_t kTrialStream = 0x747269616cULL;
constexpr std::uint64_t kObfuscationStream = 0x6f626673ULL;

}  // namespace

CooperationLabel label_cooperative(const slang::StrategyProgram& p, int rounds,
                                   std::uint64_t seed) {
  arena::MatchConfig cfg;
  cfg.game = GameKind::kIpd;
  cfg.rounds = rounds;
  cfg.seed = seed;
  const arena::MatchRecord rec = arena::play_match(p, cooperator(), cfg);

  CooperationLabel label;
  label.rounds = rounds;
  label.seed = seed;
  label.trace = rec.actions(games::Player::kA);
  for (const auto& f : rec.faults) {
    if (f.player == games::Player::kA) {
      label.fault = f.fault;
      label.fault_round = f.round;
      break;
    }
  }
  label.cooperative = !label.fault &&
                      static_cast<int>(label.trace.size()) == rounds &&
                      std::all_of(label.trace.begin(), label.trace.end(),
                                  [](const std::string& a) { return a == "C"; });
  return label;
}

double cooperative_fraction(const slang::StrategyProgram& p, int trials, int rounds,
                            std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    if (label_cooperative(p, rounds, derive_seed(seed, kTrialStream, static_cast<std::uint64_t>(t)))
            .cooperative) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / trials;
}

bool is_stochastic(const slang::SyntaxTree& tree) {
  bool found = false;
  auto check_expr = [&](const slang::Expr& e) {
    if (e.kind == slang::ExprKind::kCall && (e.text == "rand_int" || e.text == "choice")) {
      found = true;
    }
  };
  for (const auto& fn : tree.functions) {
    slang::for_each_stmt(fn.body, [&](const slang::Stmt& s) {
      for (const auto& e : s.exprs) slang::for_each_expr(e, check_expr);
    });
  }
  return found;
}

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::kUnmasked: return "unmasked";
    case Variant::kMasked: return "masked";
    case Variant::kObfuscated: return "obfuscated";
  }
  return "unmasked";
}

std::vector<BenchmarkItem> build_benchmark(const std::vector<CorpusEntry>& corpus,
                                           std::uint64_t seed, int rounds, int jobs) {
  std::vector<std::vector<BenchmarkItem>> per(corpus.size());
  arena::parallel_for(corpus.size(), jobs, [&](std::size_t idx) {
    const auto& entry = corpus[idx];
    const std::string& id = entry.id;
    auto reload = [&](std::string text, Variant v) {
      return slang::load_program({std::move(text), id + "." + std::string(variant_name(v))},
                                 GameKind::kIpd);
    };
    const slang::StrategyProgram unmasked =
        reload(analysis::strip_comments(entry.program.source).text, Variant::kUnmasked);
    const slang::StrategyProgram masked =
        reload(slang::render(analysis::mask(unmasked.tree).first), Variant::kMasked);
    Rng rng(derive_seed(seed, kObfuscationStream, idx));
    const slang::StrategyProgram obfuscated =
        reload(slang::render(analysis::obfuscate(unmasked.tree, rng).first), Variant::kObfuscated);

    const bool stochastic = is_stochastic(unmasked.tree);
    const CooperationLabel base = label_cooperative(unmasked, rounds, seed);
    std::vector<BenchmarkItem>& out = per[idx];
    out.push_back({id, Variant::kUnmasked, unmasked.source, base, stochastic});
    for (const auto* variant : {&masked, &obfuscated}) {
      const Variant v = variant == &masked ? Variant::kMasked : Variant::kObfuscated;
      const CooperationLabel label = label_cooperative(*variant, rounds, seed);
      if (label.trace != base.trace || label.cooperative != base.cooperative) {
        throw BehaviorMismatch(std::string(variant_name(v)) + " variant of '" + id +
                               "' changed the action trace");
      }
      out.push_back({id, v, variant->source, label, stochastic});
    }
  });
  std::vector<BenchmarkItem> items;
  for (auto& group : per) {
    for (auto& item : group) items.push_back(std::move(item));
  }
  return items;
}

std::vector<CorpusEntry> load_corpus(const fs::path& dir, std::vector<std::string>& errors) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir)) {
    if (de.is_regular_file() && de.path().extension() == ".slang") files.push_back(de.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    try {
      out.push_back({f.stem().string(), slang::load_program_file(f, GameKind::kIpd)});
    } catch (const std::exception& e) {
      errors.push_back(f.string() + ": " + e.what());
    }
  }
  return out;
}

Json to_json(const CooperationLabel& label) {
  Json j;
  j["cooperative"] = label.cooperative;
  j["rounds"] = label.rounds;
  j["seed"] = label.seed;
  j["trace"] = label.trace;
  if (label.fault) {
    Json f = arena::to_json(*label.fault);
    f["round"] = label.fault_round;
    j["fault"] = std::move(f);
  } else {
    j["fault"] = nullptr;
  }
  return j;
}

Json labels_manifest(const std::vector<BenchmarkItem>& items, std::uint64_t seed, int rounds) {
  Json j;
  j["schema_version"] = arena::kRecordSchemaVersion;
  j["seed"] = seed;
  j["rounds"] = rounds;
  Json arr = Json::array();
  int programs = 0;
  int cooperative = 0;
  int stochastic = 0;
  for (const auto& item : items) {
    Json ji;
    ji["id"] = item.id;
    ji["variant"] = variant_name(item.variant);
    ji["cooperative"] = item.label.cooperative;
    ji["stochastic"] = item.stochastic;
    ji["seed"] = item.label.seed;
    ji["trace"] = item.label.trace;
    ji["fault"] = item.label.fault ? Json(runtime::fault_kind_name(item.label.fault->kind))
                                   : Json(nullptr);
    arr.push_back(std::move(ji));
    if (item.variant == Variant::kUnmasked) {
      ++programs;
      cooperative += item.label.cooperative ? 1 : 0;
      stochastic += item.stochastic ? 1 : 0;
    }
  }
  j["items"] = std::move(arr);
  j["summary"] = {{"programs", programs},
                  {"cooperative", cooperative},
                  {"stochastic", stochastic},
                  {"deterministic", programs - stochastic}};
  return j;
}

void write_benchmark(const fs::path& out, const std::vector<BenchmarkItem>& items,
                     std::uint64_t seed, int rounds) {
  for (const auto& item : items) {
    const fs::path dir = out / std::string(variant_name(item.variant));
    fs::create_directories(dir);
    arena::write_file_atomic(dir / (item.id + ".slang"), item.source.text);
  }
  fs::create_directories(out);
  arena::write_file_atomic(out / "labels.json", arena::dump(labels_manifest(items, seed, rounds)));
}

}  // namespace osg::oracle
