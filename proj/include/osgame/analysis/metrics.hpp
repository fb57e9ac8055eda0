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

#include <map>
#include <string>

#include "osgame/slang/ast.hpp"

namespace osg::analysis {

// 1 + number of if, elif, while, for, `and` and `or` nodes over all functions.
int cyclomatic(const slang::SyntaxTree& tree);

struct HalsteadReport {
  int eta1 = 0;  // distinct operators
  int eta2 = 0;  // distinct operands
  int n1 = 0;    // total operators
  int n2 = 0;    // total operands
  double volume = 0.0;
  double difficulty = 0.0;
  double effort = 0.0;

  // Occurrence counts keyed by a printable operator/operand name.
  std::map<std::string, int> operators;
  std::map<std::string, int> operands;
};

// Operators: keywords (fn let if elif else while for in return and or not),
// arithmetic and comparison operators, unary minus, '=' in let/assign, one
// "()" per call site and one "[]" per index site. Operands: identifiers
// (definitions, parameters, variables, callees) and literals. The grouping
// delimiters ( ) { } [ ] , are not counted. See docs/metrics.md.
HalsteadReport halstead(const slang::SyntaxTree& tree);

struct OsasReport {
  int tainted_sites = 0;
  int total_sites = 0;
  double score = 0.0;
};

// Opponent-source access score. Taint starts at `opp_source` and flows
// through let/assign, call arguments and results, user-function parameters
// and returns, loop variables, and implicitly into every assignment and
// return nested under a tainted condition. Sites are if/elif/while
// conditions, for-loop iterables and return statements.
OsasReport osas(const slang::SyntaxTree& tree);

struct MetricsReport {
  int cyclomatic = 0;
  HalsteadReport halstead;
  OsasReport osas;
};

inline constexpr int kMetricsSchemaVersion = 1;

MetricsReport compute_metrics(const slang::SyntaxTree& tree);

// Flat key/value JSON object with a schema_version field.
std::string metrics_to_json(const MetricsReport& report, int indent = 2);
// Header line and one data row.
std::string metrics_csv_header();
std::string metrics_to_csv_row(const MetricsReport& report);

}  // namespace osg::analysis
