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

#include <doctest.h>

#include <string>

#include "osgame/slang/parser.hpp"
#include "osgame/slang/renderer.hpp"
#include "osgame/slang/token.hpp"
#include "test_support.hpp"

using namespace osg::slang;

namespace {

std::vector<TokenKind> kinds(const std::string& text) {
  std::vector<TokenKind> out;
  for (const auto& t : tokenize({text, "t"})) out.push_back(t.kind);
  return out;
}

SyntaxTree parse_text(const std::string& text) { return parse_source({text, "t"}); }

}  // namespace

TEST_SUITE("slang") {

TEST_CASE("tokens carry exact lexemes and spans") {
  const std::string text = "fn strategy() { return \"C\" } # done";
  const auto toks = tokenize({text, "t"});
  REQUIRE(toks.size() == 9);
  CHECK(toks[0].kind == TokenKind::kKeyword);
  CHECK(toks[1].lexeme == "strategy");
  CHECK(toks[6].kind == TokenKind::kString);
  CHECK(toks[6].lexeme == "\"C\"");
  CHECK(toks[8].kind == TokenKind::kComment);
  for (const auto& t : toks) CHECK(text.substr(t.span.begin, t.span.end - t.span.begin) == t.lexeme);
}

TEST_CASE("two-character operators win over one-character prefixes") {
  const auto toks = tokenize({"a<=b==c!=d>=e", "t"});
  REQUIRE(toks.size() == 9);
  CHECK(toks[1].lexeme == "<=");
  CHECK(toks[3].lexeme == "==");
  CHECK(toks[5].lexeme == "!=");
  CHECK(toks[7].lexeme == ">=");
}

TEST_CASE("comments run raw to end of line, quotes included") {
  CHECK(kinds("# say \"hi\nx") == std::vector{TokenKind::kComment, TokenKind::kIdentifier});
}

TEST_CASE("lexical errors") {
  CHECK_THROWS_AS(tokenize({"\"open", "t"}), LexError);
  CHECK_THROWS_AS(tokenize({"a ; b", "t"}), LexError);
  CHECK_THROWS_AS(tokenize({"x = \"\xff\"", "t"}), LexError);
  CHECK_THROWS_AS(tokenize({std::string(100, 'a'), "t"}, 50), LexError);
  try {
    tokenize({"let x = @", "t"});
    FAIL("expected LexError");
  } catch (const LexError& e) {
    CHECK(e.span().begin == 8);
  }
}

TEST_CASE("string escapes round-trip") {
  const std::string raw = "a\"b\\c\nd\te";
  const std::string enc = encode_string_literal(raw);
  CHECK(enc == "\"a\\\"b\\\\c\\nd\\te\"");
  CHECK(decode_string_literal(enc) == raw);
}

TEST_CASE("parse TFT") {
  const auto tree = parse_text(
      "fn strategy() {\n  if round_index == 0 {\n    return \"C\"\n  }\n"
      "  return opp_history[-1]\n}\n");
  REQUIRE(tree.functions.size() == 1);
  const auto* fn = tree.find("strategy");
  REQUIRE(fn != nullptr);
  REQUIRE(fn->body.size() == 2);
  CHECK(fn->body[0].kind == StmtKind::kIf);
  CHECK(fn->body[1].kind == StmtKind::kReturn);
  const Expr& idx = fn->body[1].exprs[0];
  CHECK(idx.kind == ExprKind::kIndex);
  CHECK(idx.operands[1].kind == ExprKind::kUnary);
}

TEST_CASE("statements are newline-insensitive") {
  const auto a = parse_text("fn strategy() { let x = 1 x = x + 1 return \"C\" }");
  const auto b = parse_text("fn strategy() {\n let x = 1\n x = x + 1\n return \"C\"\n}");
  CHECK(structurally_equal(a, b));
}

TEST_CASE("precedence: or < and < not < comparison < additive < multiplicative < unary") {
  const auto tree = parse_text("fn strategy() { return 1 + 2 * 3 == 7 and not false or true }");
  const Expr& e = tree.functions[0].body[0].exprs[0];
  REQUIRE(e.kind == ExprKind::kBinary);
  CHECK(e.binary_op == BinaryOp::kOr);
  const Expr& conj = e.operands[0];
  CHECK(conj.binary_op == BinaryOp::kAnd);
  const Expr& eq = conj.operands[0];
  CHECK(eq.binary_op == BinaryOp::kEq);
  CHECK(eq.operands[0].binary_op == BinaryOp::kAdd);
  CHECK(eq.operands[0].operands[1].binary_op == BinaryOp::kMul);
}

TEST_CASE("parenthesised pair and grouping") {
  const auto tree = parse_text("fn strategy() { let p = (1, 2) let q = (3) return \"C\" }");
  const auto& body = tree.functions[0].body;
  CHECK(body[0].exprs[0].kind == ExprKind::kPair);
  CHECK(body[1].exprs[0].kind == ExprKind::kInt);
}

TEST_CASE("if / elif / else shape") {
  const auto tree = parse_text(
      "fn strategy() { if true { return \"C\" } elif false { return \"D\" } else { return \"C\" } }");
  const Stmt& s = tree.functions[0].body[0];
  CHECK(s.exprs.size() == 2);
  CHECK(s.bodies.size() == 3);
  CHECK(s.has_else());
}

TEST_CASE("parse errors report position and expectation") {
  try {
    parse_text("fn strategy() {\n  return\n}\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("return requires an expression") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_text("fn helper() { return 1 }"), ParseError);
  CHECK_THROWS_AS(parse_text("fn strategy() { 1 + 2 }"), ParseError);
  CHECK_THROWS_AS(parse_text("fn strategy( { }"), ParseError);
  CHECK_THROWS_AS(parse_text(""), ParseError);
}

TEST_CASE("nesting limit") {
  std::string deep = "fn strategy() { return ";
  for (int i = 0; i < kMaxNesting + 5; ++i) deep += "(";
  deep += "1";
  for (int i = 0; i < kMaxNesting + 5; ++i) deep += ")";
  deep += " }";
  CHECK_THROWS_AS(parse_text(deep), ParseError);
}

TEST_CASE("render is a fixed point and preserves structure over the corpus") {
  for (const auto& entry : std::filesystem::directory_iterator(osg::testing::fixture("corpus"))) {
    const auto text = read_text_file(entry.path());
    const auto tree = parse_text(text);
    const std::string once = render(tree);
    const auto reparsed = parse_text(once);
    CHECK(structurally_equal(tree, reparsed));
    CHECK(render(reparsed) == once);
  }
}

TEST_CASE("render keeps needed parentheses only") {
  const auto tree = parse_text("fn strategy() { return (1 + 2) * (3) - -(4) }");
  CHECK(render_expr(tree.functions[0].body[0].exprs[0]) == "(1 + 2) * 3 - -4");
  const auto sub = parse_text("fn strategy() { return 1 - (2 - 3) }");
  CHECK(render_expr(sub.functions[0].body[0].exprs[0]) == "1 - (2 - 3)");
}

}  // TEST_SUITE
