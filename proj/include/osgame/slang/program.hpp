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
#include <stdexcept>
#include <string>
#include <vector>

#include "osgame/games/game_kind.hpp"
#include "osgame/slang/ast.hpp"

namespace osg::slang {

// A strategy program: its exact source text and the validated syntax tree.
struct StrategyProgram {
  SourceText source;
  SyntaxTree tree;
};

// Lexing, parsing or validation failed. what() holds the formatted
// diagnostics, one per line.
class ProgramError : public std::runtime_error {
 public:
  ProgramError(SourceText source, std::vector<Diagnostic> diagnostics);

  const SourceText& source() const { return source_; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  SourceText source_;
  std::vector<Diagnostic> diagnostics_;
};

// Tokenize, parse and validate. Throws ProgramError.
StrategyProgram load_program(SourceText src, games::GameKind game);

// Reads a UTF-8 `.slang` file. Throws std::runtime_error if the file cannot be
// read, ProgramError if it is not a valid program.
StrategyProgram load_program_file(const std::filesystem::path& path,
                                  games::GameKind game);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace osg::slang
