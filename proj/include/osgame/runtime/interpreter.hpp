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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "osgame/games/coin.hpp"
#include "osgame/games/game_kind.hpp"
#include "osgame/rng.hpp"
#include "osgame/runtime/value.hpp"
#include "osgame/slang/ast.hpp"

namespace osg::runtime {

// Per-invocation resource limits.
struct Budget {
  std::uint64_t step_limit = 100000;
  int call_depth_limit = 64;
  std::size_t list_length_cap = 4096;
  std::size_t string_length_cap = 256 * 1024;

  bool valid() const {
    return step_limit > 0 && call_depth_limit > 0 && list_length_cap > 0 &&
           string_length_cap > 0;
  }
  bool operator==(const Budget&) const = default;
};

enum class FaultKind {
  kStepBudgetExceeded,
  kCallDepthExceeded,
  kTypeError,
  kDivisionByZero,
  kIndexOutOfRange,
  kInvalidReturn,
  kLengthCapExceeded,
};

// Kebab-case names used in records, e.g. "step-budget-exceeded".
std::string_view fault_kind_name(FaultKind kind);
std::optional<FaultKind> parse_fault_kind(std::string_view name);

struct RuntimeFault {
  FaultKind kind = FaultKind::kTypeError;
  slang::Span span;
  std::string detail;

  bool operator==(const RuntimeFault&) const = default;
};

// Thrown by builtin_call; the interpreter attaches the call span.
class FaultSignal : public std::runtime_error {
 public:
  explicit FaultSignal(RuntimeFault fault)
      : std::runtime_error(fault.detail), fault_(std::move(fault)) {}
  const RuntimeFault& fault() const { return fault_; }

 private:
  RuntimeFault fault_;
};

// What the Coin Game position builtins report, from the caller's side.
struct CoinView {
  int n = games::kDefaultBoardSize;
  games::Position my_pos;
  games::Position opp_pos;
  games::Position my_coin;
  games::Position opp_coin;
};

// Ambient bindings for one invocation. Histories hold action or move strings
// and have length round_index. opp_source is the opponent's current source.
struct Bindings {
  games::GameKind game = games::GameKind::kIpd;
  std::vector<std::string> my_history;
  std::vector<std::string> opp_history;
  std::string my_source;
  std::string opp_source;
  int round_index = 0;
  std::optional<CoinView> coin;

  bool operator==(const Bindings&) const = default;
};

struct EvalResult {
  Value value;
  std::uint64_t steps = 0;
  std::optional<RuntimeFault> fault;

  bool ok() const { return !fault.has_value(); }
  // The returned action; only meaningful when ok().
  const std::string& action() const { return value.as_string(); }
};

// Runs the tree's `strategy` once. The tree must have passed validation for
// env.game. Faults are returned, never thrown. Throws std::invalid_argument
// when the bindings are inconsistent (history lengths, missing coin view) or
// the budget is not positive.
EvalResult evaluate(const slang::SyntaxTree& tree, const Bindings& env,
                    const Budget& budget, Rng& rng);

// Executes one builtin. Throws FaultSignal (with an empty span) on type
// errors and range violations, std::invalid_argument for unknown names or
// wrong arity.
Value builtin_call(std::string_view name, std::span<const Value> args,
                   const Bindings& env, Rng& rng, const Budget& budget = {});

}  // namespace osg::runtime
