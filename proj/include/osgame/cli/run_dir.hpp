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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osgame/arena/records.hpp"

namespace osg::cli {

inline constexpr const char* kOutDirEnv = "OSGAME_OUT_DIR";

std::string sha256_hex(std::string_view data);
// Throws std::runtime_error naming the path when it cannot be read.
std::string sha256_file(const std::filesystem::path& path);

// Output directory of one command invocation. Holds config.json (the exact
// resolved configuration) and manifest.json (engine version, config hash,
// input hashes, artifacts). Contains no wall-clock data, so identical inputs
// give identical directories.
class RunDir {
 public:
  // `explicit_dir` wins; otherwise $OSGAME_OUT_DIR, else ./osgame-runs, with
  // a subdirectory named after the command and the config hash.
  RunDir(std::string command, arena::Json config,
         const std::optional<std::filesystem::path>& explicit_dir);

  const std::filesystem::path& path() const { return root_; }
  const arena::Json& config() const { return config_; }

  void add_input(const std::filesystem::path& file);
  // Writes atomically and records the artifact.
  std::filesystem::path write(const std::string& name, const std::string& content);
  // Writes config.json and manifest.json.
  void finish();

 private:
  std::string command_;
  arena::Json config_;
  std::string config_text_;
  std::filesystem::path root_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::pair<std::string, std::string>> artifacts_;
};

}  // namespace osg::cli
