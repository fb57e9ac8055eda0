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

#include <json.hpp>

#include "osgame/arena/match.hpp"
#include "osgame/arena/meta_game.hpp"
#include "osgame/arena/provider.hpp"
#include "osgame/arena/tournament.hpp"

namespace osg::arena {

using Json = nlohmann::ordered_json;

// Versioned JSON forms of the arena records. Key order is fixed so that a
// record serializes to the same bytes on every run.

Json to_json(const MatchConfig& cfg);
// Keys absent from `j` keep their value from `base`. Throws
// std::invalid_argument on unknown keys or ill-typed values.
MatchConfig match_config_from_json(const Json& j, const MatchConfig& base = {});

Json to_json(const runtime::RuntimeFault& fault);
runtime::RuntimeFault fault_from_json(const Json& j);

Json to_json(const games::CoinState& s);
games::CoinState coin_state_from_json(const Json& j);

Json to_json(const MatchRecord& rec);
MatchRecord match_record_from_json(const Json& j);

Json to_json(const MetaHistoryEntry& e);
MetaHistoryEntry history_entry_from_json(const Json& j);

Json to_json(const JudgeLabels& labels);
JudgeLabels judge_labels_from_json(const Json& j);

Json to_json(const MetaGameRecord& rec);
MetaGameRecord meta_record_from_json(const Json& j);

Json to_json(const TournamentTable& table);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

// Writes through a temporary file and rename, so readers never observe a
// partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace osg::arena
