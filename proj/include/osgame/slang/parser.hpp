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

#include "osgame/slang/ast.hpp"
#include "osgame/slang/token.hpp"

namespace osg::slang {

// Maximum nesting of blocks and sub-expressions accepted by the parser.
inline constexpr int kMaxNesting = 200;

// Builds a syntax tree from a token stream. Comment tokens are skipped.
// `eof_offset` is the source length, used for end-of-input diagnostics.
// Throws ParseError at the first error, with the set of expected tokens.
SyntaxTree parse(const std::vector<Token>& tokens, std::size_t eof_offset);

// tokenize + parse.
SyntaxTree parse_source(const SourceText& src,
                        std::size_t cap = kDefaultSourceCap);

}  // namespace osg::slang
