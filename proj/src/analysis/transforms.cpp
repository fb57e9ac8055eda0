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

#include "osgame/analysis/transforms.hpp"

#include <algorithm>
#include <set>

#include "osgame/slang/builtins.hpp"
#include "osgame/slang/token.hpp"

namespace osg::analysis {

using slang::Block;
using slang::Expr;
using slang::ExprKind;
using slang::Stmt;
using slang::StmtKind;
using slang::SyntaxTree;

void RenameMap::add(std::string from, std::string to) {
  entries_.emplace_back(std::move(from), std::move(to));
}

std::optional<std::string> RenameMap::lookup(const std::string& from) const {
  for (const auto& [k, v] : entries_) {
    if (k == from) return v;
  }
  return std::nullopt;
}

bool RenameMap::injective() const {
  std::set<std::string> seen_to;
  std::set<std::string> seen_from;
  for (const auto& [k, v] : entries_) {
    if (!seen_from.insert(k).second || !seen_to.insert(v).second) return false;
  }
  return true;
}

slang::SourceText strip_comments(const slang::SourceText& src) {
  const auto tokens = slang::tokenize(src);
  const std::string& text = src.text;
  std::string out;
  out.reserve(text.size());
  std::size_t cursor = 0;
  for (const auto& t : tokens) {
    if (t.kind != slang::TokenKind::kComment) continue;
    std::size_t cut = t.span.begin;
    // Trim blanks between the preceding code and the comment.
    while (cut > cursor && (text[cut - 1] == ' ' || text[cut - 1] == '\t')) --cut;
    const bool own_line = cut == 0 || text[cut - 1] == '\n';
    out.append(text, cursor, cut - cursor);
    cursor = t.span.end;
    if (own_line) {
      // Drop the whole line, including its line break.
      if (cursor < text.size() && text[cursor] == '\r') ++cursor;
      if (cursor < text.size() && text[cursor] == '\n') ++cursor;
    }
  }
  out.append(text, cursor, std::string::npos);
  return {std::move(out), src.origin};
}

namespace {

void collect_expr(const Expr& e, std::set<std::string>& out) {
  if (e.kind == ExprKind::kName || e.kind == ExprKind::kCall) out.insert(e.text);
  for (const auto& c : e.operands) collect_expr(c, out);
}

void collect_block(const Block& block, std::set<std::string>& out) {
  slang::for_each_stmt(block, [&](const Stmt& s) {
    if (!s.name.empty()) out.insert(s.name);
    for (const auto& e : s.exprs) collect_expr(e, out);
  });
}

// User-declared names in first-appearance order.
std::vector<std::string> declared_names(const SyntaxTree& tree) {
  std::vector<std::string> out;
  auto add = [&](const std::string& n) {
    if (n != slang::kEntryPoint && std::find(out.begin(), out.end(), n) == out.end()) {
      out.push_back(n);
    }
  };
  for (const auto& fn : tree.functions) add(fn.name);
  for (const auto& fn : tree.functions) {
    for (const auto& p : fn.params) add(p.name);
    slang::for_each_stmt(fn.body, [&](const Stmt& s) {
      if (s.kind == StmtKind::kLet || s.kind == StmtKind::kFor) add(s.name);
    });
  }
  return out;
}

void rename_expr(Expr& e, const RenameMap& map, const std::set<std::string>& functions,
                 bool functions_only) {
  if (e.kind == ExprKind::kName && !functions_only && !slang::is_ambient(e.text)) {
    if (auto to = map.lookup(e.text)) e.text = *to;
  } else if (e.kind == ExprKind::kCall && functions.count(e.text)) {
    if (auto to = map.lookup(e.text)) e.text = *to;
  }
  for (auto& c : e.operands) rename_expr(c, map, functions, functions_only);
}

void rename_block(Block& block, const RenameMap& map,
                  const std::set<std::string>& functions, bool functions_only) {
  for (auto& s : block) {
    if (!s.name.empty() && !functions_only) {
      if (auto to = map.lookup(s.name)) s.name = *to;
    }
    for (auto& e : s.exprs) rename_expr(e, map, functions, functions_only);
    for (auto& b : s.bodies) rename_block(b, map, functions, functions_only);
  }
}

SyntaxTree rename(const SyntaxTree& tree, const RenameMap& map, bool functions_only) {
  std::set<std::string> functions;
  for (const auto& fn : tree.functions) functions.insert(fn.name);
  SyntaxTree out = tree;
  for (auto& fn : out.functions) {
    if (auto to = map.lookup(fn.name)) fn.name = *to;
    if (!functions_only) {
      for (auto& p : fn.params) {
        if (auto to = map.lookup(p.name)) p.name = *to;
      }
    }
    rename_block(fn.body, map, functions, functions_only);
  }
  return out;
}

}  // namespace

std::vector<std::string> identifiers_in(const SyntaxTree& tree) {
  std::set<std::string> names;
  for (const auto& fn : tree.functions) {
    names.insert(fn.name);
    for (const auto& p : fn.params) names.insert(p.name);
    collect_block(fn.body, names);
  }
  return {names.begin(), names.end()};
}

SyntaxTree apply_renames(const SyntaxTree& tree, const RenameMap& map) {
  return rename(tree, map, false);
}

std::pair<SyntaxTree, RenameMap> mask(const SyntaxTree& tree) {
  const auto existing = identifiers_in(tree);
  auto taken = [&](const std::string& n) {
    return std::binary_search(existing.begin(), existing.end(), n) ||
           slang::is_reserved_name(n);
  };
  RenameMap map;
  int next = 1;
  for (const auto& fn : tree.functions) {
    if (fn.name == slang::kEntryPoint || map.lookup(fn.name)) continue;
    std::string fresh;
    do {
      fresh = "fn_" + std::to_string(next++);
    } while (taken(fresh));
    map.add(fn.name, fresh);
  }
  return {rename(tree, map, true), std::move(map)};
}

std::pair<SyntaxTree, RenameMap> obfuscate(const SyntaxTree& tree, Rng& rng) {
  const auto existing = identifiers_in(tree);
  std::set<std::string> used(existing.begin(), existing.end());
  RenameMap map;
  for (const auto& name : declared_names(tree)) {
    std::string fresh;
    do {
      const auto len = static_cast<std::size_t>(rng.uniform(12, 20));
      fresh.assign(len, 'I');
      for (auto& c : fresh) c = rng.below(2) ? 'l' : 'I';
    } while (used.count(fresh) || slang::is_reserved_name(fresh));
    used.insert(fresh);
    map.add(name, fresh);
  }
  return {apply_renames(tree, map), std::move(map)};
}

}  // namespace osg::analysis
