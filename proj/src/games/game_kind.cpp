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

#include "osgame/games/game_kind.hpp"

#include <algorithm>
#include <array>

namespace osg::games {
namespace {

constexpr std::array<std::string_view, 2> kIpdActions = {"C", "D"};
constexpr std::array<std::string_view, 4> kCoinMoves = {"UP", "DOWN", "LEFT", "RIGHT"};

}  // namespace

std::string_view game_name(GameKind game) {
  return game == GameKind::kIpd ? "ipd" : "coin";
}

std::optional<GameKind> parse_game_name(std::string_view name) {
  if (name == "ipd") return GameKind::kIpd;
  if (name == "coin") return GameKind::kCoin;
  return std::nullopt;
}

std::span<const std::string_view> legal_actions(GameKind game) {
  if (game == GameKind::kIpd) return kIpdActions;
  return kCoinMoves;
}

bool is_legal_action(GameKind game, std::string_view action) {
  const auto acts = legal_actions(game);
  return std::find(acts.begin(), acts.end(), action) != acts.end();
}

std::string_view default_fallback(GameKind game) {
  return game == GameKind::kIpd ? "D" : "UP";
}

}  // namespace osg::games
