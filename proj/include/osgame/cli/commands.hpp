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
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace osg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // completed, but with faults
inline constexpr int kExitUsage = 2;   // bad flags or unreadable input

// Bad flags, config or input files.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flags shared by every command that plays matches. Unset flags fall back
// to the --config file, then to defaults.
struct GameOptions {
  std::optional<std::string> game;
  std::optional<int> rounds;
  std::optional<std::string> payoff;  // "T,R,P,S"
  std::optional<std::uint64_t> step_limit;
  std::optional<int> call_depth;
  std::optional<std::size_t> list_cap;
  std::optional<std::string> fallback;
  std::optional<std::uint64_t> seed;
  std::optional<int> board_size;
  std::optional<std::string> config_file;
  std::optional<std::string> out;
  std::optional<int> jobs;
};

struct MatchOptions {
  GameOptions game;
  std::vector<std::string> programs;
};

struct MetaOptions {
  GameOptions game;
  std::optional<std::string> provider_a;
  std::optional<std::string> provider_b;
  std::optional<std::string> tag_a;
  std::optional<std::string> tag_b;
  std::optional<int> meta_rounds;
  std::optional<int> seeds;
  std::optional<std::string> judge;
  std::optional<std::string> judge_labels;
  std::optional<double> timeout;
};

struct LabelOptions {
  GameOptions game;
  std::string dir;
  bool variants = false;
  std::optional<int> trials;
};

struct MetricsOptions {
  std::string file;
  std::string game = "ipd";
  std::string format = "json";
};

struct TransformOptions {
  std::string mode;
  std::string file;
  std::string game = "ipd";
  std::uint64_t seed = 0;
  std::optional<std::string> output;
  std::optional<std::string> map;
};

struct TournamentOptions {
  GameOptions game;
  std::vector<std::string> programs;
  std::optional<int> repetitions;
};

struct EvolveOptions {
  GameOptions game;
  std::vector<std::string> programs;
  std::optional<std::string> matrix;
  std::optional<std::string> x0;
  std::optional<double> dt;
  std::optional<int> steps;
  std::optional<std::string> method;
  std::optional<int> resolution;
  std::optional<int> repetitions;
  bool flow_only = false;
};

int cmd_match(const MatchOptions& o, std::ostream& out, std::ostream& err);
int cmd_meta(const MetaOptions& o, std::ostream& out, std::ostream& err);
int cmd_label(const LabelOptions& o, std::ostream& out, std::ostream& err);
int cmd_metrics(const MetricsOptions& o, std::ostream& out, std::ostream& err);
int cmd_transform(const TransformOptions& o, std::ostream& out, std::ostream& err);
int cmd_tournament(const TournamentOptions& o, std::ostream& out, std::ostream& err);
int cmd_evolve(const EvolveOptions& o, std::ostream& out, std::ostream& err);

}  // namespace osg::cli
