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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace osg::slang {

inline constexpr std::size_t kDefaultSourceCap = 64 * 1024;

// Half-open byte range [begin, end) into a source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const Span&) const = default;
};

struct SourceText {
  std::string text;
  std::string origin;
};

enum class Severity { kError, kWarning };

struct Diagnostic {
  Span span;
  Severity severity = Severity::kError;
  std::string message;
};

// 1-based line and column of a byte offset.
struct LineCol {
  std::size_t line = 1;
  std::size_t column = 1;
};

LineCol line_col(std::string_view text, std::size_t offset);

// "origin:line:col: message"
std::string format_diagnostic(const SourceText& src, const Diagnostic& diag);

// Raised by tokenize and parse. Carries the first error only.
class SlangError : public std::runtime_error {
 public:
  SlangError(Span span, std::string message,
             std::vector<std::string> expected = {});

  const Span& span() const { return span_; }
  const std::string& message() const { return message_; }
  // Parse errors: the set of tokens that would have been accepted.
  const std::vector<std::string>& expected() const { return expected_; }

  Diagnostic diagnostic() const;

 private:
  Span span_;
  std::string message_;
  std::vector<std::string> expected_;
};

class LexError : public SlangError {
 public:
  using SlangError::SlangError;
};

class ParseError : public SlangError {
 public:
  using SlangError::SlangError;
};

}  // namespace osg::slang
