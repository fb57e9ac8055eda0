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

#include <span>
#include <string_view>

#include "osgame/games/game_kind.hpp"

namespace osg::slang {

struct BuiltinInfo {
  std::string_view name;
  int arity;
  bool coin_only;   // only available when the game is the Coin Game
  bool stochastic;  // draws from the program's random stream
};

std::span<const BuiltinInfo> builtin_table();
const BuiltinInfo* find_builtin(std::string_view name);
bool builtin_available(const BuiltinInfo& info, games::GameKind game);

// Read-only names bound by the runtime in every function.
std::span<const std::string_view> ambient_bindings();
bool is_ambient(std::string_view name);

// True for keywords, builtins and ambient bindings.
bool is_reserved_name(std::string_view name);

}  // namespace osg::slang
