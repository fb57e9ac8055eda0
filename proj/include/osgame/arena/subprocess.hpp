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

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <sys/types.h>

namespace osg::arena {

// A child process whose stdin/stdout are connected to this process through a
// socket pair. Used for the newline-delimited JSON agent protocol. The child
// is killed and reaped on destruction.
class ChildProcess {
 public:
  // Throws std::runtime_error when the process cannot be started.
  explicit ChildProcess(const std::vector<std::string>& argv);
  ~ChildProcess();

  ChildProcess(const ChildProcess&) = delete;
  ChildProcess& operator=(const ChildProcess&) = delete;

  // Writes `line` plus '\n'. Returns false if the child has gone away.
  bool write_line(const std::string& line);

  // Reads one line (without the '\n'). nullopt on timeout or end of stream.
  std::optional<std::string> read_line(std::chrono::milliseconds timeout);

  bool alive() const { return pid_ > 0 && !eof_; }
  void terminate();

 private:
  pid_t pid_ = -1;
  int fd_ = -1;
  bool eof_ = false;
  std::string buffer_;
};

}  // namespace osg::arena
