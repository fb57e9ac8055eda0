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

#include "osgame/slang/ast.hpp"

namespace osg::slang {

std::string_view op_lexeme(UnaryOp op) {
  return op == UnaryOp::kNeg ? "-" : "not";
}

std::string_view op_lexeme(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd: return "+";
    case BinaryOp::kSub: return "-";
    case BinaryOp::kMul: return "*";
    case BinaryOp::kDiv: return "/";
    case BinaryOp::kMod: return "%";
    case BinaryOp::kEq: return "==";
    case BinaryOp::kNe: return "!=";
    case BinaryOp::kLt: return "<";
    case BinaryOp::kLe: return "<=";
    case BinaryOp::kGt: return ">";
    case BinaryOp::kGe: return ">=";
    case BinaryOp::kAnd: return "and";
    case BinaryOp::kOr: return "or";
  }
  return "?";
}

const FunctionDef* SyntaxTree::find(std::string_view name) const {
  for (const auto& f : functions) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

namespace {

template <typename T>
bool all_equal(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!structurally_equal(a[i], b[i])) return false;
  }
  return true;
}

bool blocks_equal(const std::vector<Block>& a, const std::vector<Block>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!all_equal(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::kInt:
      if (a.int_value != b.int_value) return false;
      break;
    case ExprKind::kBool:
      if (a.bool_value != b.bool_value) return false;
      break;
    case ExprKind::kString:
    case ExprKind::kName:
    case ExprKind::kCall:
      if (a.text != b.text) return false;
      break;
    case ExprKind::kUnary:
      if (a.unary_op != b.unary_op) return false;
      break;
    case ExprKind::kBinary:
      if (a.binary_op != b.binary_op) return false;
      break;
    default:
      break;
  }
  return all_equal(a.operands, b.operands);
}

bool structurally_equal(const Stmt& a, const Stmt& b) {
  return a.kind == b.kind && a.name == b.name && all_equal(a.exprs, b.exprs) &&
         blocks_equal(a.bodies, b.bodies);
}

bool structurally_equal(const SyntaxTree& a, const SyntaxTree& b) {
  if (a.functions.size() != b.functions.size()) return false;
  for (std::size_t i = 0; i < a.functions.size(); ++i) {
    const auto& fa = a.functions[i];
    const auto& fb = b.functions[i];
    if (fa.name != fb.name || fa.params.size() != fb.params.size()) return false;
    for (std::size_t k = 0; k < fa.params.size(); ++k) {
      if (fa.params[k].name != fb.params[k].name) return false;
    }
    if (!all_equal(fa.body, fb.body)) return false;
  }
  return true;
}

void for_each_expr(const Expr& e, const std::function<void(const Expr&)>& fn) {
  fn(e);
  for (const auto& child : e.operands) for_each_expr(child, fn);
}

void for_each_stmt(const Block& block,
                   const std::function<void(const Stmt&)>& fn) {
  for (const auto& s : block) {
    fn(s);
    for (const auto& body : s.bodies) for_each_stmt(body, fn);
  }
}

}  // namespace osg::slang
