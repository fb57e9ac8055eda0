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

#include "osgame/slang/builtins.hpp"

#include <algorithm>
#include <array>

#include "osgame/slang/token.hpp"

namespace osg::slang {
namespace {

constexpr std::array<BuiltinInfo, 19> kBuiltins = {{
    {"len", 1, false, false},
    {"last", 2, false, false},
    {"count", 2, false, false},
    {"contains", 2, false, false},
    {"append", 2, false, false},
    {"range", 1, false, false},
    {"abs", 1, false, false},
    {"min", 2, false, false},
    {"max", 2, false, false},
    {"rand_int", 2, false, true},
    {"choice", 1, false, true},
    {"my_pos", 0, true, false},
    {"opp_pos", 0, true, false},
    {"my_coin", 0, true, false},
    {"opp_coin", 0, true, false},
    {"wrap_dist", 2, true, false},
    {"adjacent", 1, true, false},
    {"board_size", 0, true, false},
    {"str", 1, false, false},
}};

constexpr std::array<std::string_view, 5> kAmbient = {
    "my_history", "opp_history", "my_source", "opp_source", "round_index"};

}  // namespace

std::span<const BuiltinInfo> builtin_table() { return kBuiltins; }

const BuiltinInfo* find_builtin(std::string_view name) {
  auto it = std::find_if(kBuiltins.begin(), kBuiltins.end(),
                         [&](const BuiltinInfo& b) { return b.name == name; });
  return it == kBuiltins.end() ? nullptr : &*it;
}

bool builtin_available(const BuiltinInfo& info, games::GameKind game) {
  return !info.coin_only || game == games::GameKind::kCoin;
}

std::span<const std::string_view> ambient_bindings() { return kAmbient; }

bool is_ambient(std::string_view name) {
  return std::find(kAmbient.begin(), kAmbient.end(), name) != kAmbient.end();
}

bool is_reserved_name(std::string_view name) {
  return is_keyword(name) || find_builtin(name) != nullptr || is_ambient(name);
}

}  // namespace osg::slang
