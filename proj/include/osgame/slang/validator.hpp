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

#include <vector>

#include "osgame/games/game_kind.hpp"
#include "osgame/slang/ast.hpp"

namespace osg::slang {

struct ValidationReport {
  bool ok = true;
  std::vector<Diagnostic> diagnostics;
};

// Scope, arity and builtin-gating checks. Never throws; `ok` is false iff a
// diagnostic of error severity was produced.
ValidationReport validate(const SyntaxTree& tree, games::GameKind game);

}  // namespace osg::slang
