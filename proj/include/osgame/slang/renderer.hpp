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

#include <string>

#include "osgame/slang/ast.hpp"

namespace osg::slang {

// Canonical source for a tree: two-space indentation, one statement per line,
// minimal parentheses, a blank line between functions. Comments are not part
// of the tree and are therefore never emitted.
std::string render(const SyntaxTree& tree);
std::string render_expr(const Expr& e);

}  // namespace osg::slang
