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
#include <string_view>
#include <vector>

#include "osgame/slang/source.hpp"

namespace osg::slang {

enum class TokenKind {
  kKeyword,
  kIdentifier,
  kInteger,
  kString,
  kOperator,
  kDelimiter,
  kComment,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kIdentifier;
  // Exact source slice at `span` (string literals keep their quotes).
  std::string lexeme;
  Span span;
};

bool is_keyword(std::string_view word);

// Tokenizes a strategy program. Comments are kept as kComment tokens.
// Throws LexError on an unterminated string, an illegal character, invalid
// UTF-8, or when the text exceeds `cap` bytes.
std::vector<Token> tokenize(const SourceText& src,
                            std::size_t cap = kDefaultSourceCap);

// Decodes the body of a string literal lexeme (without validation; the lexer
// has already accepted it).
std::string decode_string_literal(std::string_view lexeme);

// Inverse of decode_string_literal: quotes and escapes `value`.
std::string encode_string_literal(std::string_view value);

}  // namespace osg::slang
