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

#include <algorithm>
#include <array>
#include <cctype>

#include "osgame/slang/token.hpp"

namespace osg::slang {
namespace {

constexpr std::array<std::string_view, 14> kKeywords = {
    "fn",    "let", "if",     "elif", "else", "while", "for",
    "in",    "return", "true", "false", "and", "or",   "not"};

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Returns the offset of the first invalid UTF-8 byte, or npos.
std::size_t find_invalid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    if (c < 0x80) {
      len = 1;
    } else if ((c & 0xE0) == 0xC0 && c >= 0xC2) {
      len = 2;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
    } else if ((c & 0xF8) == 0xF0 && c <= 0xF4) {
      len = 4;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return i;
    }
    i += len;
  }
  return std::string_view::npos;
}

}  // namespace

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword: return "keyword";
    case TokenKind::kIdentifier: return "identifier";
    case TokenKind::kInteger: return "integer";
    case TokenKind::kString: return "string";
    case TokenKind::kOperator: return "operator";
    case TokenKind::kDelimiter: return "delimiter";
    case TokenKind::kComment: return "comment";
  }
  return "?";
}

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(const SourceText& src, std::size_t cap) {
  const std::string_view text = src.text;
  if (text.size() > cap) {
    throw LexError({cap, text.size()},
                   "source exceeds " + std::to_string(cap) + " bytes");
  }
  if (auto bad = find_invalid_utf8(text); bad != std::string_view::npos) {
    throw LexError({bad, bad + 1}, "invalid UTF-8 sequence");
  }

  std::vector<Token> tokens;
  std::size_t i = 0;
  auto emit = [&](TokenKind kind, std::size_t begin, std::size_t end) {
    tokens.push_back({kind, std::string(text.substr(begin, end - begin)),
                      {begin, end}});
  };

  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      // A trailing '\r' belongs to the line break, not the comment.
      std::size_t end = i;
      if (end > start && text[end - 1] == '\r') --end;
      emit(TokenKind::kComment, start, end);
      continue;
    }
    if (is_ident_start(c)) {
      while (i < text.size() && is_ident_char(text[i])) ++i;
      const auto word = text.substr(start, i - start);
      emit(is_keyword(word) ? TokenKind::kKeyword : TokenKind::kIdentifier,
           start, i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i < text.size() && is_ident_start(text[i])) {
        throw LexError({i, i + 1}, "illegal character in integer literal");
      }
      emit(TokenKind::kInteger, start, i);
      continue;
    }
    if (c == '"') {
      ++i;
      bool closed = false;
      while (i < text.size()) {
        const char d = text[i];
        if (d == '"') {
          ++i;
          closed = true;
          break;
        }
        if (d == '\n') break;
        if (d == '\\') {
          if (i + 1 >= text.size()) break;
          const char e = text[i + 1];
          if (e != '"' && e != '\\' && e != 'n' && e != 't') {
            throw LexError({i, i + 2}, "unknown escape sequence");
          }
          i += 2;
          continue;
        }
        ++i;
      }
      if (!closed) throw LexError({start, i}, "unterminated string");
      emit(TokenKind::kString, start, i);
      continue;
    }

    auto two = text.substr(i, 2);
    if (two == "==" || two == "!=" || two == "<=" || two == ">=") {
      i += 2;
      emit(TokenKind::kOperator, start, i);
      continue;
    }
    switch (c) {
      case '+': case '-': case '*': case '/': case '%':
      case '<': case '>': case '=':
        ++i;
        emit(TokenKind::kOperator, start, i);
        continue;
      case '(': case ')': case '{': case '}': case '[': case ']': case ',':
        ++i;
        emit(TokenKind::kDelimiter, start, i);
        continue;
      default:
        break;
    }
    // Report the whole code point for non-ASCII input.
    std::size_t end = i + 1;
    while (end < text.size() &&
           (static_cast<unsigned char>(text[end]) & 0xC0) == 0x80) {
      ++end;
    }
    throw LexError({i, end}, "illegal character '" +
                                 std::string(text.substr(i, end - i)) + "'");
  }
  return tokens;
}

std::string decode_string_literal(std::string_view lexeme) {
  std::string out;
  if (lexeme.size() < 2) return out;
  const auto body = lexeme.substr(1, lexeme.size() - 2);
  out.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '\\' && i + 1 < body.size()) {
      const char e = body[++i];
      out.push_back(e == 'n' ? '\n' : e == 't' ? '\t' : e);
    } else {
      out.push_back(body[i]);
    }
  }
  return out;
}

std::string encode_string_literal(std::string_view value) {
  std::string out = "\"";
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

}  // namespace osg::slang
