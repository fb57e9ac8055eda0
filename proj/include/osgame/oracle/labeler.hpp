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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "osgame/arena/match.hpp"
#include "osgame/arena/records.hpp"

namespace osg::oracle {

// The opponent every program is labeled against.
inline constexpr std::string_view kCooperatorSource = "fn strategy() {\n  return \"C\"\n}\n";

inline constexpr int kLabelRounds = 10;

struct CooperationLabel {
  bool cooperative = false;
  std::vector<std::string> trace;  // the labeled program's actions
  int rounds = kLabelRounds;
  std::uint64_t seed = 0;
  std::optional<runtime::RuntimeFault> fault;  // first fault, if any
  int fault_round = 0;

  bool operator==(const CooperationLabel&) const = default;
};

// Plays `p` as player A against the pure Cooperator. Cooperative iff every
// action is "C" and no round faulted.
CooperationLabel label_cooperative(const slang::StrategyProgram& p,
                                   int rounds = kLabelRounds, std::uint64_t seed = 0);

// Fraction of `trials` independently seeded runs that label cooperative.
double cooperative_fraction(const slang::StrategyProgram& p, int trials,
                            int rounds = kLabelRounds, std::uint64_t seed = 0);

// Syntactic: the tree calls rand_int or choice somewhere, reachable or not.
bool is_stochastic(const slang::SyntaxTree& tree);

enum class Variant { kUnmasked, kMasked, kObfuscated };
std::string_view variant_name(Variant v);

struct BenchmarkItem {
  std::string id;
  Variant variant = Variant::kUnmasked;
  slang::SourceText source;
  CooperationLabel label;
  bool stochastic = false;
};

struct CorpusEntry {
  std::string id;
  slang::StrategyProgram program;
};

// A transform changed a program's behavior.
class BehaviorMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Strips comments (unmasked variant), then masks and obfuscates the stripped
// program. Each variant is re-parsed from its rendered text and labeled with
// the same seed; any trace difference throws BehaviorMismatch. Items come
// out grouped per program in the order unmasked, masked, obfuscated.
std::vector<BenchmarkItem> build_benchmark(const std::vector<CorpusEntry>& corpus,
                                           std::uint64_t seed, int rounds = kLabelRounds,
                                           int jobs = 1);

// Reads every `.slang` file in `dir` (sorted by name) for the IPD. Files that
// fail to load are reported in `errors` as "<path>: <message>".
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir,
                                     std::vector<std::string>& errors);

arena::Json to_json(const CooperationLabel& label);

// labels.json manifest: schema_version, seed, rounds, items, summary.
arena::Json labels_manifest(const std::vector<BenchmarkItem>& items, std::uint64_t seed,
                            int rounds);

// Writes unmasked/, masked/ and obfuscated/ directories of `<id>.slang`
// files plus labels.json under `out`.
void write_benchmark(const std::filesystem::path& out, const std::vector<BenchmarkItem>& items,
                     std::uint64_t seed, int rounds);

}  // namespace osg::oracle
