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

#include <filesystem>
#include <string>

#include "osgame/games/game_kind.hpp"
#include "osgame/slang/program.hpp"

namespace osg::testing {

inline std::filesystem::path fixtures_dir() { return OSGAME_FIXTURES_DIR; }

inline std::filesystem::path fixture(const std::string& rel) { return fixtures_dir() / rel; }

inline slang::StrategyProgram corpus_program(const std::string& name) {
  return slang::load_program_file(fixture("corpus/" + name + ".slang"), games::GameKind::kIpd);
}

inline slang::StrategyProgram coin_program(const std::string& name) {
  return slang::load_program_file(fixture("coin/" + name + ".slang"), games::GameKind::kCoin);
}

inline slang::StrategyProgram ipd_source(const std::string& text) {
  return slang::load_program({text, "<test>"}, games::GameKind::kIpd);
}

inline std::filesystem::path echo_agent_path() { return OSGAME_ECHO_AGENT; }

}  // namespace osg::testing
