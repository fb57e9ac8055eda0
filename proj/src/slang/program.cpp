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

#include "osgame/slang/program.hpp"

#include <fstream>
#include <sstream>

#include "osgame/slang/parser.hpp"
#include "osgame/slang/validator.hpp"

namespace osg::slang {
namespace {

std::string join_diagnostics(const SourceText& src,
                             const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) {
    if (!out.empty()) out += '\n';
    out += format_diagnostic(src, d);
  }
  return out;
}

}  // namespace

ProgramError::ProgramError(SourceText source, std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_diagnostics(source, diagnostics)),
      source_(std::move(source)),
      diagnostics_(std::move(diagnostics)) {}

StrategyProgram load_program(SourceText src, games::GameKind game) {
  SyntaxTree tree;
  try {
    tree = parse_source(src);
  } catch (const SlangError& e) {
    throw ProgramError(std::move(src), {e.diagnostic()});
  }
  auto report = validate(tree, game);
  if (!report.ok) throw ProgramError(std::move(src), std::move(report.diagnostics));
  return {std::move(src), std::move(tree)};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StrategyProgram load_program_file(const std::filesystem::path& path,
                                  games::GameKind game) {
  return load_program({read_text_file(path), path.string()}, game);
}

}  // namespace osg::slang
