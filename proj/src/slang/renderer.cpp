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

#include "osgame/slang/renderer.hpp"

#include "osgame/slang/token.hpp"

namespace osg::slang {
namespace {

enum Prec : int {
  kOr = 1,
  kAnd = 2,
  kNot = 3,
  kCompare = 4,
  kAdditive = 5,
  kTerm = 6,
  kNeg = 7,
  kPostfix = 8,
  kPrimary = 9,
};

int binary_prec(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr: return kOr;
    case BinaryOp::kAnd: return kAnd;
    case BinaryOp::kAdd:
    case BinaryOp::kSub: return kAdditive;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod: return kTerm;
    default: return kCompare;
  }
}

int prec(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kBinary: return binary_prec(e.binary_op);
    case ExprKind::kUnary: return e.unary_op == UnaryOp::kNot ? kNot : kNeg;
    case ExprKind::kIndex: return kPostfix;
    default: return kPrimary;
  }
}

void emit_expr(std::string& out, const Expr& e, int min_prec);

void emit_list(std::string& out, const std::vector<Expr>& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    emit_expr(out, items[i], kOr);
  }
}

void emit_expr(std::string& out, const Expr& e, int min_prec) {
  const int p = prec(e);
  const bool paren = p < min_prec;
  if (paren) out += '(';
  switch (e.kind) {
    case ExprKind::kInt:
      out += std::to_string(e.int_value);
      break;
    case ExprKind::kBool:
      out += e.bool_value ? "true" : "false";
      break;
    case ExprKind::kString:
      out += encode_string_literal(e.text);
      break;
    case ExprKind::kName:
      out += e.text;
      break;
    case ExprKind::kUnary:
      out += op_lexeme(e.unary_op);
      if (e.unary_op == UnaryOp::kNot) out += ' ';
      emit_expr(out, e.operands[0], p);
      break;
    case ExprKind::kBinary:
      emit_expr(out, e.operands[0], p);
      out += ' ';
      out += op_lexeme(e.binary_op);
      out += ' ';
      emit_expr(out, e.operands[1], p + 1);
      break;
    case ExprKind::kCall:
      out += e.text;
      out += '(';
      emit_list(out, e.operands);
      out += ')';
      break;
    case ExprKind::kIndex:
      emit_expr(out, e.operands[0], kPostfix);
      out += '[';
      emit_expr(out, e.operands[1], kOr);
      out += ']';
      break;
    case ExprKind::kList:
      out += '[';
      emit_list(out, e.operands);
      out += ']';
      break;
    case ExprKind::kPair:
      out += '(';
      emit_list(out, e.operands);
      out += ')';
      break;
  }
  if (paren) out += ')';
}

void emit_block(std::string& out, const Block& block, int indent);

void emit_indent(std::string& out, int indent) { out.append(2 * indent, ' '); }

void emit_stmt(std::string& out, const Stmt& s, int indent) {
  emit_indent(out, indent);
  switch (s.kind) {
    case StmtKind::kLet:
      out += "let " + s.name + " = ";
      emit_expr(out, s.exprs[0], kOr);
      break;
    case StmtKind::kAssign:
      out += s.name + " = ";
      emit_expr(out, s.exprs[0], kOr);
      break;
    case StmtKind::kIf:
      for (std::size_t k = 0; k < s.bodies.size(); ++k) {
        if (k == 0) {
          out += "if ";
        } else if (k < s.exprs.size()) {
          out += " elif ";
        } else {
          out += " else";
        }
        if (k < s.exprs.size()) emit_expr(out, s.exprs[k], kOr);
        out += " {\n";
        emit_block(out, s.bodies[k], indent + 1);
        emit_indent(out, indent);
        out += '}';
      }
      break;
    case StmtKind::kWhile:
      out += "while ";
      emit_expr(out, s.exprs[0], kOr);
      out += " {\n";
      emit_block(out, s.bodies[0], indent + 1);
      emit_indent(out, indent);
      out += '}';
      break;
    case StmtKind::kFor:
      out += "for " + s.name + " in ";
      emit_expr(out, s.exprs[0], kOr);
      out += " {\n";
      emit_block(out, s.bodies[0], indent + 1);
      emit_indent(out, indent);
      out += '}';
      break;
    case StmtKind::kReturn:
      out += "return ";
      emit_expr(out, s.exprs[0], kOr);
      break;
    case StmtKind::kExpr:
      emit_expr(out, s.exprs[0], kOr);
      break;
  }
  out += '\n';
}

void emit_block(std::string& out, const Block& block, int indent) {
  for (const auto& s : block) emit_stmt(out, s, indent);
}

}  // namespace

std::string render_expr(const Expr& e) {
  std::string out;
  emit_expr(out, e, kOr);
  return out;
}

std::string render(const SyntaxTree& tree) {
  std::string out;
  for (std::size_t i = 0; i < tree.functions.size(); ++i) {
    const auto& fn = tree.functions[i];
    if (i) out += '\n';
    out += "fn " + fn.name + "(";
    for (std::size_t k = 0; k < fn.params.size(); ++k) {
      if (k) out += ", ";
      out += fn.params[k].name;
    }
    out += ") {\n";
    emit_block(out, fn.body, 1);
    out += "}\n";
  }
  return out;
}

}  // namespace osg::slang
