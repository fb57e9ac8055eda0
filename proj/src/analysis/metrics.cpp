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

#include "osgame/analysis/metrics.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace osg::analysis {

using slang::Block;
using slang::Expr;
using slang::ExprKind;
using slang::Stmt;
using slang::StmtKind;

int cyclomatic(const slang::SyntaxTree& tree) {
  int decisions = 0;
  auto count_expr = [&](const Expr& root) {
    slang::for_each_expr(root, [&](const Expr& e) {
      if (e.kind == ExprKind::kBinary &&
          (e.binary_op == slang::BinaryOp::kAnd || e.binary_op == slang::BinaryOp::kOr)) {
        ++decisions;
      }
    });
  };
  for (const auto& fn : tree.functions) {
    slang::for_each_stmt(fn.body, [&](const Stmt& s) {
      switch (s.kind) {
        case StmtKind::kIf:
          decisions += static_cast<int>(s.exprs.size());  // if + each elif
          break;
        case StmtKind::kWhile:
        case StmtKind::kFor:
          ++decisions;
          break;
        default:
          break;
      }
      for (const auto& e : s.exprs) count_expr(e);
    });
  }
  return 1 + decisions;
}

namespace {

class HalsteadCounter {
 public:
  void op(const std::string& name) { ++report_.operators[name]; }
  void operand(const std::string& name) { ++report_.operands[name]; }

  void function(const slang::FunctionDef& fn) {
    op("fn");
    operand(fn.name);
    for (const auto& p : fn.params) operand(p.name);
    block(fn.body);
  }

  HalsteadReport finish() {
    auto& r = report_;
    r.eta1 = static_cast<int>(r.operators.size());
    r.eta2 = static_cast<int>(r.operands.size());
    for (const auto& [_, n] : r.operators) r.n1 += n;
    for (const auto& [_, n] : r.operands) r.n2 += n;
    const int vocabulary = r.eta1 + r.eta2;
    const int length = r.n1 + r.n2;
    r.volume = vocabulary > 0 ? length * std::log2(static_cast<double>(vocabulary)) : 0.0;
    r.difficulty = r.eta2 > 0 ? (r.eta1 / 2.0) * (static_cast<double>(r.n2) / r.eta2) : 0.0;
    r.effort = r.difficulty * r.volume;
    return std::move(report_);
  }

 private:
  void block(const Block& b) {
    for (const auto& s : b) stmt(s);
  }

  void stmt(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::kLet:
        op("let");
        op("=");
        operand(s.name);
        break;
      case StmtKind::kAssign:
        op("=");
        operand(s.name);
        break;
      case StmtKind::kIf:
        op("if");
        for (std::size_t k = 1; k < s.exprs.size(); ++k) op("elif");
        if (s.has_else()) op("else");
        break;
      case StmtKind::kWhile:
        op("while");
        break;
      case StmtKind::kFor:
        op("for");
        op("in");
        operand(s.name);
        break;
      case StmtKind::kReturn:
        op("return");
        break;
      case StmtKind::kExpr:
        break;
    }
    for (const auto& e : s.exprs) expr(e);
    for (const auto& b : s.bodies) block(b);
  }

  void expr(const Expr& e) {
    switch (e.kind) {
      case ExprKind::kInt:
        operand(std::to_string(e.int_value));
        break;
      case ExprKind::kBool:
        operand(e.bool_value ? "true" : "false");
        break;
      case ExprKind::kString:
        // Quoted, so a string never collides with an identifier of the same text.
        operand("\"" + e.text + "\"");
        break;
      case ExprKind::kName:
        operand(e.text);
        break;
      case ExprKind::kUnary:
        op(e.unary_op == slang::UnaryOp::kNeg ? "-(unary)" : "not");
        break;
      case ExprKind::kBinary:
        op(std::string(slang::op_lexeme(e.binary_op)));
        break;
      case ExprKind::kCall:
        op("()");
        operand(e.text);
        break;
      case ExprKind::kIndex:
        op("[]");
        break;
      case ExprKind::kList:
      case ExprKind::kPair:
        break;
    }
    for (const auto& child : e.operands) expr(child);
  }

  HalsteadReport report_;
};

}  // namespace

HalsteadReport halstead(const slang::SyntaxTree& tree) {
  HalsteadCounter counter;
  for (const auto& fn : tree.functions) counter.function(fn);
  return counter.finish();
}

MetricsReport compute_metrics(const slang::SyntaxTree& tree) {
  return {cyclomatic(tree), halstead(tree), osas(tree)};
}

namespace {

nlohmann::ordered_json flat(const MetricsReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kMetricsSchemaVersion;
  j["cyclomatic"] = r.cyclomatic;
  j["halstead_eta1"] = r.halstead.eta1;
  j["halstead_eta2"] = r.halstead.eta2;
  j["halstead_n1"] = r.halstead.n1;
  j["halstead_n2"] = r.halstead.n2;
  j["halstead_volume"] = r.halstead.volume;
  j["halstead_difficulty"] = r.halstead.difficulty;
  j["halstead_effort"] = r.halstead.effort;
  j["osas_tainted_sites"] = r.osas.tainted_sites;
  j["osas_total_sites"] = r.osas.total_sites;
  j["osas"] = r.osas.score;
  return j;
}

}  // namespace

std::string metrics_to_json(const MetricsReport& report, int indent) {
  return flat(report).dump(indent);
}

std::string metrics_csv_header() {
  std::string out;
  const auto j = flat(MetricsReport{});
  for (const auto& [key, _] : j.items()) {
    if (!out.empty()) out += ',';
    out += key;
  }
  return out;
}

std::string metrics_to_csv_row(const MetricsReport& report) {
  std::string out;
  bool first = true;
  const auto j = flat(report);
  for (const auto& [_, value] : j.items()) {
    if (!first) out += ',';
    first = false;
    out += value.dump();
  }
  return out;
}

}  // namespace osg::analysis
