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

#include <map>
#include <set>

#include "osgame/analysis/metrics.hpp"

namespace osg::analysis {

using slang::Block;
using slang::Expr;
using slang::ExprKind;
using slang::FunctionDef;
using slang::Stmt;
using slang::StmtKind;

namespace {

constexpr std::string_view kTaintSeed = "opp_source";

// Flow-insensitive taint over the whole program: once a variable is tainted
// anywhere in a function it is tainted throughout that function.
class TaintAnalysis {
 public:
  explicit TaintAnalysis(const slang::SyntaxTree& tree) : tree_(tree) {
    for (const auto& fn : tree.functions) functions_.emplace(fn.name, &fn);
  }

  void solve() {
    do {
      changed_ = false;
      for (const auto& fn : tree_.functions) propagate_block(fn, fn.body, false);
    } while (changed_);
  }

  OsasReport count_sites() {
    OsasReport r;
    for (const auto& fn : tree_.functions) count_block(fn, fn.body, false, r);
    r.score = r.total_sites > 0
                  ? static_cast<double>(r.tainted_sites) / r.total_sites
                  : 0.0;
    return r;
  }

 private:
  bool var_tainted(const FunctionDef& fn, const std::string& name) const {
    auto it = vars_.find(fn.name);
    return it != vars_.end() && it->second.count(name) > 0;
  }

  void taint_var(const FunctionDef& fn, const std::string& name) {
    if (vars_[fn.name].insert(name).second) changed_ = true;
  }

  void taint_return(const FunctionDef& fn) {
    if (returns_.insert(fn.name).second) changed_ = true;
  }

  bool tainted(const FunctionDef& fn, const Expr& e) const {
    switch (e.kind) {
      case ExprKind::kName:
        return e.text == kTaintSeed || var_tainted(fn, e.text);
      case ExprKind::kCall: {
        if (functions_.count(e.text) && returns_.count(e.text)) return true;
        break;
      }
      default:
        break;
    }
    for (const auto& child : e.operands) {
      if (tainted(fn, child)) return true;
    }
    return false;
  }

  // Taints callee parameters bound to tainted arguments.
  void propagate_calls(const FunctionDef& fn, const Expr& root) {
    slang::for_each_expr(root, [&](const Expr& e) {
      if (e.kind != ExprKind::kCall) return;
      auto it = functions_.find(e.text);
      if (it == functions_.end()) return;
      const FunctionDef& callee = *it->second;
      for (std::size_t i = 0; i < e.operands.size() && i < callee.params.size(); ++i) {
        if (tainted(fn, e.operands[i])) taint_var(callee, callee.params[i].name);
      }
    });
  }

  void propagate_block(const FunctionDef& fn, const Block& block, bool ctx) {
    for (const auto& s : block) propagate_stmt(fn, s, ctx);
  }

  void propagate_stmt(const FunctionDef& fn, const Stmt& s, bool ctx) {
    for (const auto& e : s.exprs) propagate_calls(fn, e);
    switch (s.kind) {
      case StmtKind::kLet:
      case StmtKind::kAssign:
        if (ctx || tainted(fn, s.exprs[0])) taint_var(fn, s.name);
        break;
      case StmtKind::kIf: {
        // Reaching a later branch depends on every earlier condition.
        bool guard = ctx;
        for (std::size_t k = 0; k < s.exprs.size(); ++k) {
          guard = guard || tainted(fn, s.exprs[k]);
          propagate_block(fn, s.bodies[k], guard);
        }
        if (s.has_else()) propagate_block(fn, s.bodies.back(), guard);
        break;
      }
      case StmtKind::kWhile:
        propagate_block(fn, s.bodies[0], ctx || tainted(fn, s.exprs[0]));
        break;
      case StmtKind::kFor: {
        const bool t = ctx || tainted(fn, s.exprs[0]);
        if (t) taint_var(fn, s.name);
        propagate_block(fn, s.bodies[0], t);
        break;
      }
      case StmtKind::kReturn:
        if (ctx || tainted(fn, s.exprs[0])) taint_return(fn);
        break;
      case StmtKind::kExpr:
        break;
    }
  }

  void count_block(const FunctionDef& fn, const Block& block, bool ctx, OsasReport& r) {
    for (const auto& s : block) count_stmt(fn, s, ctx, r);
  }

  void site(bool is_tainted, OsasReport& r) {
    ++r.total_sites;
    if (is_tainted) ++r.tainted_sites;
  }

  void count_stmt(const FunctionDef& fn, const Stmt& s, bool ctx, OsasReport& r) {
    switch (s.kind) {
      case StmtKind::kIf: {
        bool guard = ctx;
        for (std::size_t k = 0; k < s.exprs.size(); ++k) {
          const bool t = tainted(fn, s.exprs[k]);
          site(t, r);
          guard = guard || t;
          count_block(fn, s.bodies[k], guard, r);
        }
        if (s.has_else()) count_block(fn, s.bodies.back(), guard, r);
        break;
      }
      case StmtKind::kWhile:
      case StmtKind::kFor: {
        const bool t = tainted(fn, s.exprs[0]);
        site(t, r);
        count_block(fn, s.bodies[0], ctx || t, r);
        break;
      }
      case StmtKind::kReturn:
        site(ctx || tainted(fn, s.exprs[0]), r);
        break;
      default:
        break;
    }
  }

  const slang::SyntaxTree& tree_;
  std::map<std::string, const FunctionDef*> functions_;
  std::map<std::string, std::set<std::string>> vars_;
  std::set<std::string> returns_;
  bool changed_ = false;
};

}  // namespace

OsasReport osas(const slang::SyntaxTree& tree) {
  TaintAnalysis analysis(tree);
  analysis.solve();
  return analysis.count_sites();
}

}  // namespace osg::analysis
