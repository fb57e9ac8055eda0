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

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "osgame/slang/source.hpp"

namespace osg::slang {

enum class ExprKind {
  kInt,
  kBool,
  kString,
  kName,
  kUnary,
  kBinary,
  kCall,
  kIndex,
  kList,
  kPair,
};

enum class UnaryOp { kNeg, kNot };

enum class BinaryOp {
  kAdd, kSub, kMul, kDiv, kMod,
  kEq, kNe, kLt, kLe, kGt, kGe,
  kAnd, kOr,
};

std::string_view op_lexeme(UnaryOp op);
std::string_view op_lexeme(BinaryOp op);

// Expression node. Which fields are meaningful depends on `kind`:
//   kInt     int_value
//   kBool    bool_value
//   kString  text (decoded value)
//   kName    text (identifier)
//   kUnary   unary_op, operands[0]
//   kBinary  binary_op, operands[0..1]
//   kCall    text (callee), name_span, operands = arguments
//   kIndex   operands[0] indexed by operands[1]
//   kList    operands = elements
//   kPair    operands[0..1]
struct Expr {
  ExprKind kind = ExprKind::kInt;
  Span span;
  std::int64_t int_value = 0;
  bool bool_value = false;
  std::string text;
  Span name_span;
  UnaryOp unary_op = UnaryOp::kNeg;
  BinaryOp binary_op = BinaryOp::kAdd;
  std::vector<Expr> operands;
};

enum class StmtKind { kLet, kAssign, kIf, kWhile, kFor, kReturn, kExpr };

struct Stmt;
using Block = std::vector<Stmt>;

// Statement node:
//   kLet/kAssign  name, name_span, exprs[0] = value
//   kIf           exprs = if/elif conditions; bodies[k] pairs with exprs[k];
//                 one extra trailing body is the else branch
//   kWhile        exprs[0] = condition, bodies[0]
//   kFor          name = loop variable, exprs[0] = iterable, bodies[0]
//   kReturn       exprs[0]
//   kExpr         exprs[0] (always a call)
struct Stmt {
  StmtKind kind = StmtKind::kExpr;
  Span span;
  std::string name;
  Span name_span;
  std::vector<Expr> exprs;
  std::vector<Block> bodies;

  bool has_else() const {
    return kind == StmtKind::kIf && bodies.size() > exprs.size();
  }
};

struct Param {
  std::string name;
  Span span;
};

struct FunctionDef {
  std::string name;
  Span name_span;
  std::vector<Param> params;
  Block body;
  Span span;
};

inline constexpr std::string_view kEntryPoint = "strategy";

struct SyntaxTree {
  std::vector<FunctionDef> functions;

  const FunctionDef* find(std::string_view name) const;
};

// Equality that ignores spans.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const SyntaxTree& a, const SyntaxTree& b);

// Pre-order traversal helpers used by the analyses.
void for_each_expr(const Expr& e, const std::function<void(const Expr&)>& fn);
void for_each_stmt(const Block& block,
                   const std::function<void(const Stmt&)>& fn);

}  // namespace osg::slang
