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

#include "osgame/runtime/interpreter.hpp"

#include <array>
#include <map>

#include "osgame/slang/builtins.hpp"

namespace osg::runtime {

using slang::BinaryOp;
using slang::Block;
using slang::Expr;
using slang::ExprKind;
using slang::FunctionDef;
using slang::Span;
using slang::Stmt;
using slang::StmtKind;
using slang::UnaryOp;

namespace {

constexpr std::array<std::pair<FaultKind, std::string_view>, 7> kFaultNames = {{
    {FaultKind::kStepBudgetExceeded, "step-budget-exceeded"},
    {FaultKind::kCallDepthExceeded, "call-depth-exceeded"},
    {FaultKind::kTypeError, "type-error"},
    {FaultKind::kDivisionByZero, "division-by-zero"},
    {FaultKind::kIndexOutOfRange, "index-out-of-range"},
    {FaultKind::kInvalidReturn, "invalid-return"},
    {FaultKind::kLengthCapExceeded, "length-cap-exceeded"},
}};

Value history_value(const std::vector<std::string>& h) {
  List items;
  items.reserve(h.size());
  for (const auto& a : h) items.emplace_back(a);
  return Value::list(std::move(items));
}

// Floor division and modulo, matching the host language the fixtures were
// ported from.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) r += b;
  return r;
}

class Interpreter {
 public:
  Interpreter(const slang::SyntaxTree& tree, const Bindings& env,
              const Budget& budget, Rng& rng)
      : env_(env), budget_(budget), rng_(rng) {
    for (const auto& fn : tree.functions) functions_.emplace(fn.name, &fn);
    ambient_.emplace("my_history", history_value(env.my_history));
    ambient_.emplace("opp_history", history_value(env.opp_history));
    ambient_.emplace("my_source", Value(env.my_source));
    ambient_.emplace("opp_source", Value(env.opp_source));
    ambient_.emplace("round_index", Value(static_cast<std::int64_t>(env.round_index)));
  }

  EvalResult run() {
    EvalResult result;
    try {
      const auto it = functions_.find(std::string(slang::kEntryPoint));
      if (it == functions_.end()) {
        raise(FaultKind::kInvalidReturn, {}, "no strategy definition");
      }
      const FunctionDef& entry = *it->second;
      Span ret_span = entry.name_span;
      std::optional<Value> value = call(entry, {}, entry.name_span, &ret_span);
      if (!value) {
        raise(FaultKind::kInvalidReturn, entry.name_span,
              "strategy finished without returning an action");
      }
      if (!value->is_string() || !games::is_legal_action(env_.game, value->as_string())) {
        raise(FaultKind::kInvalidReturn, ret_span,
              "strategy returned " + to_display(*value) + ", not a legal " +
                  std::string(games::game_name(env_.game)) + " action");
      }
      result.value = std::move(*value);
    } catch (const FaultSignal& f) {
      result.fault = f.fault();
    }
    result.steps = steps_;
    return result;
  }

 private:
  using Scope = std::vector<std::pair<std::string, Value>>;
  struct Frame {
    std::vector<Scope> scopes;
  };

  [[noreturn]] void raise(FaultKind kind, Span span, std::string detail) const {
    throw FaultSignal({kind, span, std::move(detail)});
  }

  void tick(Span span) {
    if (++steps_ > budget_.step_limit) {
      // Runaway loops are reported at the innermost loop statement.
      const Span at = loops_.empty() ? span : loops_.back();
      raise(FaultKind::kStepBudgetExceeded, at,
            "step budget of " + std::to_string(budget_.step_limit) + " exceeded");
    }
  }

  void charge(std::size_t extra, Span span) {
    for (std::size_t i = 0; i < extra; ++i) tick(span);
  }

  // Returns nullopt when the function body ends without a return.
  std::optional<Value> call(const FunctionDef& fn, std::vector<Value> args,
                            Span call_span, Span* return_span = nullptr) {
    if (++depth_ > budget_.call_depth_limit) {
      raise(FaultKind::kCallDepthExceeded, call_span,
            "call depth limit of " + std::to_string(budget_.call_depth_limit) +
                " exceeded in '" + fn.name + "'");
    }
    Frame frame;
    frame.scopes.emplace_back();
    for (std::size_t i = 0; i < fn.params.size(); ++i) {
      frame.scopes.back().emplace_back(fn.params[i].name, std::move(args[i]));
    }
    // Loops of the caller do not enclose the callee's statements.
    std::vector<Span> saved_loops;
    saved_loops.swap(loops_);
    std::optional<Value> ret;
    exec_block(fn.body, frame, ret, return_span);
    loops_.swap(saved_loops);
    --depth_;
    return ret;
  }

  // Returns true when a return statement executed.
  bool exec_block(const Block& block, Frame& frame, std::optional<Value>& ret,
                  Span* return_span) {
    frame.scopes.emplace_back();
    bool returned = false;
    for (const auto& s : block) {
      if (exec_stmt(s, frame, ret, return_span)) {
        returned = true;
        break;
      }
    }
    frame.scopes.pop_back();
    return returned;
  }

  bool want_bool(const Value& v, Span span, const char* what) const {
    if (!v.is_bool()) {
      raise(FaultKind::kTypeError, span,
            std::string(what) + " must be bool, got " + v.type_name());
    }
    return v.as_bool();
  }

  bool exec_stmt(const Stmt& s, Frame& frame, std::optional<Value>& ret,
                 Span* return_span) {
    tick(s.span);
    switch (s.kind) {
      case StmtKind::kLet:
        frame.scopes.back().emplace_back(s.name, eval(s.exprs[0], frame));
        return false;
      case StmtKind::kAssign: {
        Value v = eval(s.exprs[0], frame);
        lookup_local(frame, s.name, s.name_span) = std::move(v);
        return false;
      }
      case StmtKind::kIf:
        for (std::size_t k = 0; k < s.exprs.size(); ++k) {
          if (want_bool(eval(s.exprs[k], frame), s.exprs[k].span, "condition")) {
            return exec_block(s.bodies[k], frame, ret, return_span);
          }
        }
        if (s.has_else()) return exec_block(s.bodies.back(), frame, ret, return_span);
        return false;
      case StmtKind::kWhile: {
        loops_.push_back(s.span);
        bool returned = false;
        while (true) {
          tick(s.span);
          if (!want_bool(eval(s.exprs[0], frame), s.exprs[0].span, "condition")) break;
          if (exec_block(s.bodies[0], frame, ret, return_span)) {
            returned = true;
            break;
          }
        }
        loops_.pop_back();
        return returned;
      }
      case StmtKind::kFor: {
        const Value iterable = eval(s.exprs[0], frame);
        List items;
        if (iterable.is_list()) {
          items = iterable.as_list();
        } else if (iterable.is_string()) {
          for (char c : iterable.as_string()) items.emplace_back(std::string(1, c));
        } else {
          raise(FaultKind::kTypeError, s.exprs[0].span,
                std::string("cannot iterate over ") + iterable.type_name());
        }
        loops_.push_back(s.span);
        bool returned = false;
        for (auto& item : items) {
          tick(s.span);
          frame.scopes.emplace_back();
          frame.scopes.back().emplace_back(s.name, std::move(item));
          const bool r = exec_block(s.bodies[0], frame, ret, return_span);
          frame.scopes.pop_back();
          if (r) {
            returned = true;
            break;
          }
        }
        loops_.pop_back();
        return returned;
      }
      case StmtKind::kReturn:
        ret = eval(s.exprs[0], frame);
        if (return_span) *return_span = s.span;
        return true;
      case StmtKind::kExpr:
        eval(s.exprs[0], frame);
        return false;
    }
    return false;
  }

  Value& lookup_local(Frame& frame, const std::string& name, Span span) {
    for (auto scope = frame.scopes.rbegin(); scope != frame.scopes.rend(); ++scope) {
      for (auto it = scope->rbegin(); it != scope->rend(); ++it) {
        if (it->first == name) return it->second;
      }
    }
    raise(FaultKind::kTypeError, span, "unbound variable '" + name + "'");
  }

  const Value& lookup(Frame& frame, const std::string& name, Span span) {
    for (auto scope = frame.scopes.rbegin(); scope != frame.scopes.rend(); ++scope) {
      for (auto it = scope->rbegin(); it != scope->rend(); ++it) {
        if (it->first == name) return it->second;
      }
    }
    if (auto it = ambient_.find(name); it != ambient_.end()) return it->second;
    raise(FaultKind::kTypeError, span, "unbound variable '" + name + "'");
  }

  std::int64_t want_int(const Value& v, Span span, std::string_view op) const {
    if (!v.is_int()) {
      raise(FaultKind::kTypeError, span,
            "operator '" + std::string(op) + "' expects int, got " + v.type_name());
    }
    return v.as_int();
  }

  Value eval(const Expr& e, Frame& frame) {
    tick(e.span);
    switch (e.kind) {
      case ExprKind::kInt: return e.int_value;
      case ExprKind::kBool: return e.bool_value;
      case ExprKind::kString: return e.text;
      case ExprKind::kName: return lookup(frame, e.text, e.span);
      case ExprKind::kUnary: {
        const Value v = eval(e.operands[0], frame);
        if (e.unary_op == UnaryOp::kNot) return !want_bool(v, e.span, "operand of 'not'");
        const auto i = want_int(v, e.span, "-");
        if (i == INT64_MIN) raise(FaultKind::kTypeError, e.span, "integer overflow");
        return -i;
      }
      case ExprKind::kBinary: return eval_binary(e, frame);
      case ExprKind::kCall: return eval_call(e, frame);
      case ExprKind::kIndex: return eval_index(e, frame);
      case ExprKind::kList: {
        if (e.operands.size() > budget_.list_length_cap) {
          raise(FaultKind::kLengthCapExceeded, e.span, "list literal exceeds length cap");
        }
        List items;
        items.reserve(e.operands.size());
        for (const auto& op : e.operands) items.push_back(eval(op, frame));
        return Value::list(std::move(items));
      }
      case ExprKind::kPair: {
        Value a = eval(e.operands[0], frame);
        Value b = eval(e.operands[1], frame);
        return Value::pair(std::move(a), std::move(b));
      }
    }
    return {};
  }

  Value eval_binary(const Expr& e, Frame& frame) {
    const BinaryOp op = e.binary_op;
    const auto lexeme = slang::op_lexeme(op);
    if (op == BinaryOp::kAnd || op == BinaryOp::kOr) {
      const bool lhs = want_bool(eval(e.operands[0], frame), e.operands[0].span,
                                 "operand of 'and'/'or'");
      if (op == BinaryOp::kAnd && !lhs) return false;
      if (op == BinaryOp::kOr && lhs) return true;
      return want_bool(eval(e.operands[1], frame), e.operands[1].span,
                       "operand of 'and'/'or'");
    }
    const Value a = eval(e.operands[0], frame);
    const Value b = eval(e.operands[1], frame);
    switch (op) {
      case BinaryOp::kEq: return a == b;
      case BinaryOp::kNe: return !(a == b);
      case BinaryOp::kLt:
      case BinaryOp::kLe:
      case BinaryOp::kGt:
      case BinaryOp::kGe: {
        int cmp = 0;
        if (a.is_int() && b.is_int()) {
          cmp = a.as_int() < b.as_int() ? -1 : a.as_int() > b.as_int() ? 1 : 0;
        } else if (a.is_string() && b.is_string()) {
          const int c = a.as_string().compare(b.as_string());
          cmp = c < 0 ? -1 : c > 0 ? 1 : 0;
        } else {
          raise(FaultKind::kTypeError, e.span,
                "cannot compare " + std::string(a.type_name()) + " with " + b.type_name());
        }
        if (op == BinaryOp::kLt) return cmp < 0;
        if (op == BinaryOp::kLe) return cmp <= 0;
        if (op == BinaryOp::kGt) return cmp > 0;
        return cmp >= 0;
      }
      case BinaryOp::kAdd:
        if (a.is_string() && b.is_string()) {
          if (a.as_string().size() + b.as_string().size() > budget_.string_length_cap) {
            raise(FaultKind::kLengthCapExceeded, e.span, "string exceeds length cap");
          }
          return a.as_string() + b.as_string();
        }
        if (a.is_list() && b.is_list()) {
          const auto size = a.as_list().size() + b.as_list().size();
          if (size > budget_.list_length_cap) {
            raise(FaultKind::kLengthCapExceeded, e.span, "list exceeds length cap");
          }
          charge(size, e.span);
          List items = a.as_list();
          items.insert(items.end(), b.as_list().begin(), b.as_list().end());
          return Value::list(std::move(items));
        }
        break;
      default:
        break;
    }
    const auto x = want_int(a, e.operands[0].span, lexeme);
    const auto y = want_int(b, e.operands[1].span, lexeme);
    std::int64_t r = 0;
    switch (op) {
      case BinaryOp::kAdd:
        if (__builtin_add_overflow(x, y, &r)) raise(FaultKind::kTypeError, e.span, "integer overflow");
        return r;
      case BinaryOp::kSub:
        if (__builtin_sub_overflow(x, y, &r)) raise(FaultKind::kTypeError, e.span, "integer overflow");
        return r;
      case BinaryOp::kMul:
        if (__builtin_mul_overflow(x, y, &r)) raise(FaultKind::kTypeError, e.span, "integer overflow");
        return r;
      case BinaryOp::kDiv:
      case BinaryOp::kMod:
        if (y == 0) raise(FaultKind::kDivisionByZero, e.span, "division by zero");
        if (x == INT64_MIN && y == -1) raise(FaultKind::kTypeError, e.span, "integer overflow");
        return op == BinaryOp::kDiv ? floor_div(x, y) : floor_mod(x, y);
      default:
        break;
    }
    raise(FaultKind::kTypeError, e.span, "unsupported operator");
  }

  Value eval_index(const Expr& e, Frame& frame) {
    const Value base = eval(e.operands[0], frame);
    const Value idx = eval(e.operands[1], frame);
    if (!idx.is_int()) {
      raise(FaultKind::kTypeError, e.operands[1].span,
            std::string("index must be int, got ") + idx.type_name());
    }
    const std::int64_t i = idx.as_int();
    auto resolve = [&](std::size_t size) -> std::size_t {
      const auto n = static_cast<std::int64_t>(size);
      const std::int64_t k = i < 0 ? i + n : i;
      if (k < 0 || k >= n) {
        raise(FaultKind::kIndexOutOfRange, e.span,
              "index " + std::to_string(i) + " out of range for length " +
                  std::to_string(size));
      }
      return static_cast<std::size_t>(k);
    };
    if (base.is_list()) return base.as_list()[resolve(base.as_list().size())];
    if (base.is_string()) {
      return std::string(1, base.as_string()[resolve(base.as_string().size())]);
    }
    if (base.is_pair()) {
      if (i == 0) return base.as_pair().first;
      if (i == 1) return base.as_pair().second;
      raise(FaultKind::kIndexOutOfRange, e.span,
            "pair index must be 0 or 1, got " + std::to_string(i));
    }
    raise(FaultKind::kTypeError, e.span,
          std::string("cannot index into ") + base.type_name());
  }

  Value eval_call(const Expr& e, Frame& frame) {
    std::vector<Value> args;
    args.reserve(e.operands.size());
    for (const auto& op : e.operands) args.push_back(eval(op, frame));

    if (auto it = functions_.find(e.text); it != functions_.end()) {
      auto ret = call(*it->second, std::move(args), e.span);
      return ret ? std::move(*ret) : Value();
    }
    try {
      Value out = builtin_call(e.text, args, env_, rng_, budget_);
      std::size_t extra = out.is_list() ? out.as_list().size() : 0;
      for (const auto& a : args) {
        if (a.is_list()) extra += a.as_list().size();
      }
      charge(extra, e.span);
      return out;
    } catch (const FaultSignal& f) {
      RuntimeFault fault = f.fault();
      fault.span = e.span;
      throw FaultSignal(std::move(fault));
    } catch (const std::invalid_argument& err) {
      raise(FaultKind::kTypeError, e.span, err.what());
    }
  }

  const Bindings& env_;
  const Budget& budget_;
  Rng& rng_;
  std::map<std::string, const FunctionDef*, std::less<>> functions_;
  std::map<std::string, Value, std::less<>> ambient_;
  std::vector<Span> loops_;
  std::uint64_t steps_ = 0;
  int depth_ = 0;
};

void check_bindings(const Bindings& env) {
  if (env.round_index < 0 ||
      env.my_history.size() != static_cast<std::size_t>(env.round_index) ||
      env.opp_history.size() != static_cast<std::size_t>(env.round_index)) {
    throw std::invalid_argument("histories must both have length round_index");
  }
  if (env.game == games::GameKind::kCoin && !env.coin) {
    throw std::invalid_argument("Coin Game bindings require a coin view");
  }
}

}  // namespace

std::string_view fault_kind_name(FaultKind kind) {
  for (const auto& [k, name] : kFaultNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<FaultKind> parse_fault_kind(std::string_view name) {
  for (const auto& [k, n] : kFaultNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

EvalResult evaluate(const slang::SyntaxTree& tree, const Bindings& env,
                    const Budget& budget, Rng& rng) {
  if (!budget.valid()) throw std::invalid_argument("budget limits must be positive");
  check_bindings(env);
  return Interpreter(tree, env, budget, rng).run();
}

}  // namespace osg::runtime
