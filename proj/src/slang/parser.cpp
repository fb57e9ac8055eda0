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

#include "osgame/slang/parser.hpp"

#include <charconv>
#include <optional>

namespace osg::slang {
namespace {

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, std::size_t eof_offset)
      : eof_offset_(eof_offset) {
    for (const auto& t : tokens) {
      if (t.kind != TokenKind::kComment) tokens_.push_back(&t);
    }
  }

  SyntaxTree parse_program() {
    SyntaxTree tree;
    while (!at_end()) {
      if (!check_word("fn")) fail("unexpected token at top level", {"'fn'"});
      tree.functions.push_back(parse_function());
    }
    if (tree.find(kEntryPoint) == nullptr) {
      throw ParseError({eof_offset_, eof_offset_}, "missing strategy definition");
    }
    return tree;
  }

 private:
  // Nesting guard for recursive productions.
  struct Depth {
    explicit Depth(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxNesting) p_.fail("nesting too deep");
    }
    ~Depth() { --p_.depth_; }
    Parser& p_;
  };

  bool at_end() const { return pos_ >= tokens_.size(); }

  const Token* peek(std::size_t ahead = 0) const {
    return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead] : nullptr;
  }

  Span here() const {
    return at_end() ? Span{eof_offset_, eof_offset_} : tokens_[pos_]->span;
  }

  Span prev_span() const {
    return pos_ > 0 ? tokens_[pos_ - 1]->span : Span{0, 0};
  }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected = {}) const {
    std::string msg = message;
    if (at_end()) {
      msg += " at end of input";
    } else {
      msg += " near '" + tokens_[pos_]->lexeme + "'";
    }
    throw ParseError(here(), msg, std::move(expected));
  }

  bool check(TokenKind kind, std::string_view lexeme) const {
    const Token* t = peek();
    return t && t->kind == kind && t->lexeme == lexeme;
  }
  bool check_word(std::string_view kw) const { return check(TokenKind::kKeyword, kw); }
  bool check_delim(std::string_view d) const { return check(TokenKind::kDelimiter, d); }
  bool check_op(std::string_view op) const { return check(TokenKind::kOperator, op); }

  bool accept_delim(std::string_view d) {
    if (!check_delim(d)) return false;
    ++pos_;
    return true;
  }

  const Token& expect(TokenKind kind, std::string_view lexeme) {
    if (!check(kind, lexeme)) {
      fail("unexpected token", {"'" + std::string(lexeme) + "'"});
    }
    return *tokens_[pos_++];
  }

  const Token& expect_identifier() {
    const Token* t = peek();
    if (!t || t->kind != TokenKind::kIdentifier) fail("unexpected token", {"identifier"});
    ++pos_;
    return *t;
  }

  FunctionDef parse_function() {
    FunctionDef fn;
    const Span start = expect(TokenKind::kKeyword, "fn").span;
    const Token& name = expect_identifier();
    fn.name = name.lexeme;
    fn.name_span = name.span;
    expect(TokenKind::kDelimiter, "(");
    if (!check_delim(")")) {
      do {
        const Token& p = expect_identifier();
        fn.params.push_back({p.lexeme, p.span});
      } while (accept_delim(","));
    }
    expect(TokenKind::kDelimiter, ")");
    fn.body = parse_block();
    fn.span = {start.begin, prev_span().end};
    return fn;
  }

  Block parse_block() {
    Depth guard(*this);
    expect(TokenKind::kDelimiter, "{");
    Block block;
    while (!check_delim("}")) {
      if (at_end()) fail("unterminated block", {"'}'", "statement"});
      block.push_back(parse_statement());
    }
    ++pos_;
    return block;
  }

  Stmt parse_statement() {
    Stmt s;
    const Span start = here();
    const Token* t = peek();
    if (check_word("let")) {
      ++pos_;
      s.kind = StmtKind::kLet;
      const Token& name = expect_identifier();
      s.name = name.lexeme;
      s.name_span = name.span;
      expect(TokenKind::kOperator, "=");
      s.exprs.push_back(parse_expr());
    } else if (check_word("if")) {
      ++pos_;
      s.kind = StmtKind::kIf;
      s.exprs.push_back(parse_expr());
      s.bodies.push_back(parse_block());
      while (check_word("elif")) {
        ++pos_;
        s.exprs.push_back(parse_expr());
        s.bodies.push_back(parse_block());
      }
      if (check_word("else")) {
        ++pos_;
        s.bodies.push_back(parse_block());
      }
    } else if (check_word("while")) {
      ++pos_;
      s.kind = StmtKind::kWhile;
      s.exprs.push_back(parse_expr());
      s.bodies.push_back(parse_block());
    } else if (check_word("for")) {
      ++pos_;
      s.kind = StmtKind::kFor;
      const Token& var = expect_identifier();
      s.name = var.lexeme;
      s.name_span = var.span;
      expect(TokenKind::kKeyword, "in");
      s.exprs.push_back(parse_expr());
      s.bodies.push_back(parse_block());
    } else if (check_word("return")) {
      ++pos_;
      s.kind = StmtKind::kReturn;
      if (!starts_expression()) fail("return requires an expression", {"expression"});
      s.exprs.push_back(parse_expr());
    } else if (t && t->kind == TokenKind::kIdentifier) {
      const Token* next = peek(1);
      if (next && next->kind == TokenKind::kOperator && next->lexeme == "=") {
        pos_ += 2;
        s.kind = StmtKind::kAssign;
        s.name = t->lexeme;
        s.name_span = t->span;
        s.exprs.push_back(parse_expr());
      } else if (next && next->kind == TokenKind::kDelimiter && next->lexeme == "(") {
        s.kind = StmtKind::kExpr;
        s.exprs.push_back(parse_call());
      } else {
        ++pos_;
        fail("expected assignment or call", {"'='", "'('"});
      }
    } else {
      fail("expected statement",
           {"'let'", "'if'", "'while'", "'for'", "'return'", "identifier"});
    }
    s.span = {start.begin, prev_span().end};
    return s;
  }

  bool starts_expression() const {
    const Token* t = peek();
    if (!t) return false;
    switch (t->kind) {
      case TokenKind::kInteger:
      case TokenKind::kString:
      case TokenKind::kIdentifier:
        return true;
      case TokenKind::kKeyword:
        return t->lexeme == "true" || t->lexeme == "false" || t->lexeme == "not";
      case TokenKind::kOperator:
        return t->lexeme == "-";
      case TokenKind::kDelimiter:
        return t->lexeme == "(" || t->lexeme == "[";
      default:
        return false;
    }
  }

  static Expr make_binary(BinaryOp op, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = ExprKind::kBinary;
    e.binary_op = op;
    e.span = {lhs.span.begin, rhs.span.end};
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
  }

  Expr parse_expr() {
    Depth guard(*this);
    return parse_or();
  }

  Expr parse_or() {
    Expr lhs = parse_and();
    while (check_word("or")) {
      ++pos_;
      lhs = make_binary(BinaryOp::kOr, std::move(lhs), parse_and());
    }
    return lhs;
  }

  Expr parse_and() {
    Expr lhs = parse_not();
    while (check_word("and")) {
      ++pos_;
      lhs = make_binary(BinaryOp::kAnd, std::move(lhs), parse_not());
    }
    return lhs;
  }

  Expr parse_not() {
    if (check_word("not")) {
      Depth guard(*this);
      const Span start = here();
      ++pos_;
      Expr e;
      e.kind = ExprKind::kUnary;
      e.unary_op = UnaryOp::kNot;
      e.operands.push_back(parse_not());
      e.span = {start.begin, e.operands[0].span.end};
      return e;
    }
    return parse_comparison();
  }

  std::optional<BinaryOp> comparison_op() const {
    const Token* t = peek();
    if (!t || t->kind != TokenKind::kOperator) return std::nullopt;
    if (t->lexeme == "==") return BinaryOp::kEq;
    if (t->lexeme == "!=") return BinaryOp::kNe;
    if (t->lexeme == "<") return BinaryOp::kLt;
    if (t->lexeme == "<=") return BinaryOp::kLe;
    if (t->lexeme == ">") return BinaryOp::kGt;
    if (t->lexeme == ">=") return BinaryOp::kGe;
    return std::nullopt;
  }

  Expr parse_comparison() {
    Expr lhs = parse_additive();
    while (auto op = comparison_op()) {
      ++pos_;
      lhs = make_binary(*op, std::move(lhs), parse_additive());
    }
    return lhs;
  }

  Expr parse_additive() {
    Expr lhs = parse_term();
    while (check_op("+") || check_op("-")) {
      const BinaryOp op = peek()->lexeme == "+" ? BinaryOp::kAdd : BinaryOp::kSub;
      ++pos_;
      lhs = make_binary(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    while (check_op("*") || check_op("/") || check_op("%")) {
      const auto& lx = peek()->lexeme;
      const BinaryOp op = lx == "*" ? BinaryOp::kMul
                          : lx == "/" ? BinaryOp::kDiv
                                      : BinaryOp::kMod;
      ++pos_;
      lhs = make_binary(op, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Expr parse_unary() {
    if (check_op("-")) {
      Depth guard(*this);
      const Span start = here();
      ++pos_;
      Expr e;
      e.kind = ExprKind::kUnary;
      e.unary_op = UnaryOp::kNeg;
      e.operands.push_back(parse_unary());
      e.span = {start.begin, e.operands[0].span.end};
      return e;
    }
    return parse_postfix();
  }

  Expr parse_postfix() {
    Expr e = parse_primary();
    while (check_delim("[")) {
      ++pos_;
      Expr idx;
      idx.kind = ExprKind::kIndex;
      Expr sub = parse_expr();
      expect(TokenKind::kDelimiter, "]");
      idx.span = {e.span.begin, prev_span().end};
      idx.operands.push_back(std::move(e));
      idx.operands.push_back(std::move(sub));
      e = std::move(idx);
    }
    return e;
  }

  Expr parse_call() {
    const Token& name = expect_identifier();
    Expr e;
    e.kind = ExprKind::kCall;
    e.text = name.lexeme;
    e.name_span = name.span;
    expect(TokenKind::kDelimiter, "(");
    if (!check_delim(")")) {
      do {
        e.operands.push_back(parse_expr());
      } while (accept_delim(","));
    }
    expect(TokenKind::kDelimiter, ")");
    e.span = {name.span.begin, prev_span().end};
    return e;
  }

  Expr parse_primary() {
    const Token* t = peek();
    if (!t) fail("unexpected end of input", {"expression"});
    Expr e;
    e.span = t->span;
    switch (t->kind) {
      case TokenKind::kInteger: {
        e.kind = ExprKind::kInt;
        const auto& lx = t->lexeme;
        auto [ptr, ec] = std::from_chars(lx.data(), lx.data() + lx.size(), e.int_value);
        if (ec != std::errc()) fail("integer literal out of range");
        ++pos_;
        return e;
      }
      case TokenKind::kString:
        e.kind = ExprKind::kString;
        e.text = decode_string_literal(t->lexeme);
        ++pos_;
        return e;
      case TokenKind::kIdentifier: {
        const Token* next = peek(1);
        if (next && next->kind == TokenKind::kDelimiter && next->lexeme == "(") {
          return parse_call();
        }
        e.kind = ExprKind::kName;
        e.text = t->lexeme;
        ++pos_;
        return e;
      }
      case TokenKind::kKeyword:
        if (t->lexeme == "true" || t->lexeme == "false") {
          e.kind = ExprKind::kBool;
          e.bool_value = t->lexeme == "true";
          ++pos_;
          return e;
        }
        break;
      case TokenKind::kDelimiter:
        if (t->lexeme == "[") {
          ++pos_;
          e.kind = ExprKind::kList;
          if (!check_delim("]")) {
            do {
              e.operands.push_back(parse_expr());
            } while (accept_delim(","));
          }
          expect(TokenKind::kDelimiter, "]");
          e.span = {t->span.begin, prev_span().end};
          return e;
        }
        if (t->lexeme == "(") {
          ++pos_;
          Expr first = parse_expr();
          if (accept_delim(",")) {
            e.kind = ExprKind::kPair;
            e.operands.push_back(std::move(first));
            e.operands.push_back(parse_expr());
            expect(TokenKind::kDelimiter, ")");
            e.span = {t->span.begin, prev_span().end};
            return e;
          }
          expect(TokenKind::kDelimiter, ")");
          // Parentheses only group; the node keeps the inner span.
          return first;
        }
        break;
      default:
        break;
    }
    fail("expected expression",
         {"integer", "string", "identifier", "'true'", "'false'", "'('", "'['"});
  }

  std::vector<const Token*> tokens_;
  std::size_t pos_ = 0;
  std::size_t eof_offset_;
  int depth_ = 0;
};

}  // namespace

SyntaxTree parse(const std::vector<Token>& tokens, std::size_t eof_offset) {
  return Parser(tokens, eof_offset).parse_program();
}

SyntaxTree parse_source(const SourceText& src, std::size_t cap) {
  return parse(tokenize(src, cap), src.text.size());
}

}  // namespace osg::slang
