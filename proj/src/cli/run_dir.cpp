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

#include "osgame/cli/run_dir.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "osgame/slang/program.hpp"

#ifndef OSGAME_VERSION
#define OSGAME_VERSION "0.0.0"
#endif

namespace osg::cli {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

std::string sha256_file(const fs::path& path) {
  return sha256_hex(slang::read_text_file(path));
}

RunDir::RunDir(std::string command, arena::Json config,
               const std::optional<fs::path>& explicit_dir)
    : command_(std::move(command)), config_(std::move(config)) {
  config_text_ = arena::dump(config_);
  if (explicit_dir) {
    root_ = *explicit_dir;
  } else {
    const char* env = std::getenv(kOutDirEnv);
    const fs::path base = env && *env ? fs::path(env) : fs::path("osgame-runs");
    root_ = base / (command_ + "-" + sha256_hex(config_text_).substr(0, 12));
  }
  fs::create_directories(root_);
}

void RunDir::add_input(const fs::path& file) {
  inputs_.emplace_back(file.string(), sha256_file(file));
}

fs::path RunDir::write(const std::string& name, const std::string& content) {
  const fs::path p = root_ / name;
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  arena::write_file_atomic(p, content);
  artifacts_.emplace_back(name, sha256_hex(content));
  return p;
}

void RunDir::finish() {
  arena::write_file_atomic(root_ / "config.json", config_text_);
  arena::Json m;
  m["schema_version"] = 1;
  m["engine"] = "osgame";
  m["engine_version"] = OSGAME_VERSION;
  m["command"] = command_;
  m["config_sha256"] = sha256_hex(config_text_);
  arena::Json inputs = arena::Json::array();
  for (const auto& [path, hash] : inputs_) inputs.push_back({{"path", path}, {"sha256", hash}});
  m["inputs"] = std::move(inputs);
  arena::Json artifacts = arena::Json::array();
  for (const auto& [path, hash] : artifacts_) {
    artifacts.push_back({{"path", path}, {"sha256", hash}});
  }
  m["artifacts"] = std::move(artifacts);
  arena::write_file_atomic(root_ / "manifest.json", arena::dump(m));
}

}  // namespace osg::cli
