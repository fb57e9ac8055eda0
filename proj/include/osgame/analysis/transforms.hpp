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
#include <string>
#include <utility>
#include <vector>

#include "osgame/rng.hpp"
#include "osgame/slang/ast.hpp"

namespace osg::analysis {

// Original identifier -> replacement. One map per program: a name is
// renamed identically wherever it occurs in the file.
class RenameMap {
 public:
  void add(std::string from, std::string to);
  std::optional<std::string> lookup(const std::string& from) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }
  bool injective() const;
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Removes every comment token. Lines that held only a comment are dropped
// and trailing blanks left behind are trimmed; all other text is unchanged.
// Throws slang::LexError when the source does not tokenize.
slang::SourceText strip_comments(const slang::SourceText& src);

// Renames helper functions to fn_1, fn_2, ... in definition order. The entry
// point keeps its name and variables are left alone.
std::pair<slang::SyntaxTree, RenameMap> mask(const slang::SyntaxTree& tree);

// Renames every user identifier (helper functions, parameters, let
// variables, loop variables) to a random string over {I, l} of length 12-20.
// Builtins, ambient bindings and `strategy` are untouched.
std::pair<slang::SyntaxTree, RenameMap> obfuscate(const slang::SyntaxTree& tree,
                                                  Rng& rng);

// Applies `map` to every user identifier in `tree`.
slang::SyntaxTree apply_renames(const slang::SyntaxTree& tree, const RenameMap& map);

// All identifier spellings occurring anywhere in the tree.
std::vector<std::string> identifiers_in(const slang::SyntaxTree& tree);

}  // namespace osg::analysis
