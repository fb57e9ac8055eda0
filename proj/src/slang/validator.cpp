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

#include "osgame/slang/validator.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "osgame/slang/builtins.hpp"

namespace osg::slang {
namespace {

class Validator {
 public:
  Validator(const SyntaxTree& tree, games::GameKind game)
      : tree_(tree), game_(game) {}

  ValidationReport run() {
    std::map<std::string, const FunctionDef*> seen;
    for (const auto& fn : tree_.functions) {
      if (is_reserved_name(fn.name)) {
        error(fn.name_span, "function name '" + fn.name + "' is reserved");
      }
      if (!seen.emplace(fn.name, &fn).second) {
        error(fn.name_span, "duplicate definition of '" + fn.name + "'");
      }
      arity_[fn.name] = static_cast<int>(fn.params.size());
    }
    if (const auto* entry = tree_.find(kEntryPoint)) {
      if (!entry->params.empty()) {
        error(entry->name_span, "entry point 'strategy' must take no parameters");
      }
      bool has_return = false;
      for_each_stmt(entry->body, [&](const Stmt& s) {
        has_return = has_return || s.kind == StmtKind::kReturn;
      });
      if (!has_return) warning(entry->name_span, "'strategy' never returns an action");
    } else {
      error({0, 0}, "missing strategy definition");
    }
    for (const auto& fn : tree_.functions) check_function(fn);
    report_.ok = std::none_of(
        report_.diagnostics.begin(), report_.diagnostics.end(),
        [](const Diagnostic& d) { return d.severity == Severity::kError; });
    return std::move(report_);
  }

 private:
  using Scope = std::vector<std::string>;

  void error(Span span, std::string msg) {
    report_.diagnostics.push_back({span, Severity::kError, std::move(msg)});
  }
  void warning(Span span, std::string msg) {
    report_.diagnostics.push_back({span, Severity::kWarning, std::move(msg)});
  }

  bool bound(const std::string& name) const {
    for (const auto& scope : scopes_) {
      if (std::find(scope.begin(), scope.end(), name) != scope.end()) return true;
    }
    return false;
  }

  void declare(const std::string& name, Span span) {
    if (is_reserved_name(name)) {
      error(span, "'" + name + "' is reserved and cannot be declared");
      return;
    }
    auto& scope = scopes_.back();
    if (std::find(scope.begin(), scope.end(), name) != scope.end()) {
      error(span, "'" + name + "' is already declared in this scope");
      return;
    }
    scope.push_back(name);
  }

  void check_function(const FunctionDef& fn) {
    scopes_.assign(1, Scope{});
    for (const auto& p : fn.params) declare(p.name, p.span);
    check_block(fn.body);
  }

  void check_block(const Block& block) {
    scopes_.emplace_back();
    for (const auto& s : block) check_stmt(s);
    scopes_.pop_back();
  }

  void check_stmt(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::kLet:
        check_expr(s.exprs[0]);
        declare(s.name, s.name_span);
        break;
      case StmtKind::kAssign:
        check_expr(s.exprs[0]);
        if (is_ambient(s.name)) {
          error(s.name_span, "cannot assign to ambient binding '" + s.name + "'");
        } else if (!bound(s.name)) {
          error(s.name_span, "assignment to undeclared variable '" + s.name + "'");
        }
        break;
      case StmtKind::kIf:
      case StmtKind::kWhile:
        for (const auto& c : s.exprs) check_expr(c);
        for (const auto& b : s.bodies) check_block(b);
        break;
      case StmtKind::kFor:
        check_expr(s.exprs[0]);
        scopes_.emplace_back();
        declare(s.name, s.name_span);
        check_block(s.bodies[0]);
        scopes_.pop_back();
        break;
      case StmtKind::kReturn:
      case StmtKind::kExpr:
        check_expr(s.exprs[0]);
        break;
    }
  }

  void check_expr(const Expr& e) {
    switch (e.kind) {
      case ExprKind::kName:
        if (!bound(e.text) && !is_ambient(e.text)) {
          error(e.span, "unbound variable '" + e.text + "'");
        }
        break;
      case ExprKind::kCall:
        check_call(e);
        break;
      default:
        break;
    }
    for (const auto& child : e.operands) check_expr(child);
  }

  void check_call(const Expr& e) {
    const int argc = static_cast<int>(e.operands.size());
    if (auto it = arity_.find(e.text); it != arity_.end()) {
      if (it->second != argc) {
        error(e.span, "'" + e.text + "' expects " + std::to_string(it->second) +
                          " argument(s), got " + std::to_string(argc));
      }
      return;
    }
    const BuiltinInfo* b = find_builtin(e.text);
    if (b == nullptr) {
      error(e.name_span, "unknown function '" + e.text + "'");
      return;
    }
    if (!builtin_available(*b, game_)) {
      error(e.name_span, "builtin not available in this game: '" + e.text + "'");
      return;
    }
    if (b->arity != argc) {
      error(e.span, "'" + e.text + "' expects " + std::to_string(b->arity) +
                        " argument(s), got " + std::to_string(argc));
    }
  }

  const SyntaxTree& tree_;
  games::GameKind game_;
  std::map<std::string, int> arity_;
  std::vector<Scope> scopes_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate(const SyntaxTree& tree, games::GameKind game) {
  return Validator(tree, game).run();
}

}  // namespace osg::slang
