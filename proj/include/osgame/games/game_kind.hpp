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

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace osg::games {

enum class GameKind { kIpd, kCoin };

std::string_view game_name(GameKind game);
std::optional<GameKind> parse_game_name(std::string_view name);

// Action strings a strategy may return: "C"/"D" or the four Coin Game moves.
std::span<const std::string_view> legal_actions(GameKind game);
bool is_legal_action(GameKind game, std::string_view action);

// Fallback substituted for a faulting program.
std::string_view default_fallback(GameKind game);

}  // namespace osg::games
