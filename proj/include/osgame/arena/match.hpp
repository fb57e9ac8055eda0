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
#include <string>
#include <vector>

#include "osgame/games/coin.hpp"
#include "osgame/games/game_kind.hpp"
#include "osgame/games/ipd.hpp"
#include "osgame/runtime/interpreter.hpp"
#include "osgame/slang/program.hpp"

namespace osg::arena {

inline constexpr int kRecordSchemaVersion = 1;

struct MatchConfig {
  games::GameKind game = games::GameKind::kIpd;
  // IPD rounds, or Coin Game max_steps.
  int rounds = 10;
  games::PayoffParams payoff;
  runtime::Budget budget;
  // Substituted for a faulting program; empty selects the game default
  // ("D" for the IPD, "UP" for the Coin Game).
  std::string fallback;
  std::uint64_t seed = 0;
  int board_size = games::kDefaultBoardSize;

  std::string resolved_fallback() const;
  // Throws std::invalid_argument on a non-positive round count, an illegal
  // fallback, invalid payoffs or budget, or a board smaller than 2.
  void check() const;
  bool operator==(const MatchConfig&) const = default;
};

struct FaultEntry {
  int round = 0;  // 1-based
  games::Player player = games::Player::kA;
  runtime::RuntimeFault fault;

  bool operator==(const FaultEntry&) const = default;
};

struct RoundRecord {
  std::string action_a;
  std::string action_b;
  int delta_a = 0;
  int delta_b = 0;
  std::uint64_t steps_a = 0;
  std::uint64_t steps_b = 0;
  std::vector<games::CoinEvent> events;  // Coin Game only

  bool operator==(const RoundRecord&) const = default;
};

struct MatchRecord {
  MatchConfig config;
  std::string source_a;
  std::string source_b;
  std::vector<RoundRecord> rounds;
  int total_a = 0;
  int total_b = 0;
  std::vector<FaultEntry> faults;
  std::string rng_algorithm;
  std::optional<games::CoinState> initial_state;  // Coin Game only

  std::vector<std::string> actions(games::Player p) const;
  bool operator==(const MatchRecord&) const = default;
};

// Stream seed for a program's evaluation in one round.
std::uint64_t program_stream_seed(std::uint64_t match_seed, games::Player p, int round);

// Plays one base-game match. Both programs are evaluated every round with
// each other's current source bound; actions resolve simultaneously. A fault
// is logged and replaced by the fallback action. Deterministic in cfg.seed.
// `b_first` only flips the evaluation order (used to check simultaneity).
MatchRecord play_match(const slang::StrategyProgram& a,
                       const slang::StrategyProgram& b, const MatchConfig& cfg,
                       bool b_first = false);

}  // namespace osg::arena
