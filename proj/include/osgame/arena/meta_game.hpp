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

#include <array>
#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "osgame/arena/match.hpp"
#include "osgame/arena/provider.hpp"

namespace osg::arena {

// Binary strategic features an external judge may attach to a submission.
enum class JudgeFeature {
  kIndependentDevelopment,
  kExploitationAttempt,
  kCounterMeasure,
  kDirectImitation,
  kFeint,
};

inline constexpr std::array<JudgeFeature, 5> kAllJudgeFeatures = {
    JudgeFeature::kIndependentDevelopment, JudgeFeature::kExploitationAttempt,
    JudgeFeature::kCounterMeasure, JudgeFeature::kDirectImitation,
    JudgeFeature::kFeint};

// snake_case key, e.g. "exploitation_attempt".
std::string_view judge_feature_key(JudgeFeature f);

struct JudgeLabels {
  std::array<bool, 5> features{};

  bool& operator[](JudgeFeature f) { return features[static_cast<std::size_t>(f)]; }
  bool operator[](JudgeFeature f) const { return features[static_cast<std::size_t>(f)]; }
  bool operator==(const JudgeLabels&) const = default;
};

struct ProviderFault {
  games::Player player = games::Player::kA;
  std::string message;

  bool operator==(const ProviderFault&) const = default;
};

struct ProviderInfo {
  std::string id;
  std::string tag;
  ProviderKind kind = ProviderKind::kStatic;

  bool operator==(const ProviderInfo&) const = default;
};

struct MetaRound {
  int meta_round = 0;  // 1-based
  std::string source_a;
  std::string source_b;
  std::vector<ProviderFault> provider_faults;
  MatchRecord match;
  std::optional<JudgeLabels> judge_a;
  std::optional<JudgeLabels> judge_b;

  bool operator==(const MetaRound&) const = default;
};

struct MetaGameRecord {
  MatchConfig config;
  int meta_rounds = 0;
  ProviderInfo provider_a;
  ProviderInfo provider_b;
  std::vector<MetaRound> rounds;

  bool operator==(const MetaGameRecord&) const = default;
};

// Round 1 produced no valid program; the run cannot continue.
class MetaGameAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Seed of the base-game match played in meta-round k.
std::uint64_t meta_round_seed(std::uint64_t run_seed, int meta_round);

// Optional judge consulted after each meta-round k > 1.
class Judge {
 public:
  virtual ~Judge() = default;
  virtual std::optional<JudgeLabels> judge(int meta_round, games::Player player,
                                           const std::string& source,
                                           const std::string& opponent_previous_source) = 0;
};

// An external classifier on the same stdin/stdout protocol:
//   -> {"type":"hello","protocol":1,"game":"ipd","role":"judge"}  <- {"type":"ready"}
//   -> {"type":"judge","meta_round":k,"player":"A","source":"...",
//       "opponent_previous_source":"..."}
//   <- {"type":"labels","features":{"independent_development":false,...}}
class ExternalJudge : public Judge {
 public:
  ExternalJudge(std::vector<std::string> argv, games::GameKind game,
                std::chrono::milliseconds timeout = std::chrono::seconds(60));
  ~ExternalJudge() override;
  std::optional<JudgeLabels> judge(int meta_round, games::Player player,
                                   const std::string& source,
                                   const std::string& opponent_previous_source) override;

 private:
  std::unique_ptr<ChildProcess> child_;
  std::chrono::milliseconds timeout_;
};

// Repeated open-source game. At meta-round k each provider receives the
// meta-history and the opponent's source from k-1, submits a program, and
// the two programs play one base-game match. A provider that fails to
// produce a valid program reuses its previous source (recorded as a
// provider fault); failing at k = 1 throws MetaGameAbort.
MetaGameRecord run_meta_game(Provider& a, Provider& b, int meta_rounds,
                             const MatchConfig& cfg, Judge* judge = nullptr);

// Merges a judge-label sidecar: {"labels":[{"meta_round":k,"player":"A",
// "features":{...}}]}. Throws std::invalid_argument on unknown rounds.
void merge_judge_labels(MetaGameRecord& record, const std::string& sidecar_json);

}  // namespace osg::arena
