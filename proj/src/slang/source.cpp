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

#include "osgame/slang/source.hpp"

#include <algorithm>

namespace osg::slang {

LineCol line_col(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  LineCol lc;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++lc.line;
      lc.column = 1;
    } else {
      ++lc.column;
    }
  }
  return lc;
}

std::string format_diagnostic(const SourceText& src, const Diagnostic& diag) {
  const auto lc = line_col(src.text, diag.span.begin);
  std::string out = src.origin.empty() ? std::string("<input>") : src.origin;
  out += ":" + std::to_string(lc.line) + ":" + std::to_string(lc.column) + ": ";
  out += diag.severity == Severity::kError ? "error: " : "warning: ";
  out += diag.message;
  return out;
}

SlangError::SlangError(Span span, std::string message,
                       std::vector<std::string> expected)
    : std::runtime_error(message),
      span_(span),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

Diagnostic SlangError::diagnostic() const {
  std::string msg = message_;
  if (!expected_.empty()) {
    msg += " (expected ";
    for (std::size_t i = 0; i < expected_.size(); ++i) {
      if (i) msg += i + 1 == expected_.size() ? " or " : ", ";
      msg += expected_[i];
    }
    msg += ")";
  }
  return {span_, Severity::kError, std::move(msg)};
}

}  // namespace osg::slang
