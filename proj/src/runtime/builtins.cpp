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

#include <algorithm>

#include "osgame/runtime/interpreter.hpp"
#include "osgame/slang/builtins.hpp"

namespace osg::runtime {
namespace {

[[noreturn]] void fault(FaultKind kind, std::string detail) {
  throw FaultSignal({kind, {}, std::move(detail)});
}

std::string describe(std::string_view fn, const Value& v, const char* wanted) {
  return std::string(fn) + ": expected " + wanted + ", got " + v.type_name();
}

std::int64_t want_int(std::string_view fn, const Value& v) {
  if (!v.is_int()) fault(FaultKind::kTypeError, describe(fn, v, "int"));
  return v.as_int();
}

const List& want_list(std::string_view fn, const Value& v) {
  if (!v.is_list()) fault(FaultKind::kTypeError, describe(fn, v, "list"));
  return v.as_list();
}

const std::string& want_string(std::string_view fn, const Value& v) {
  if (!v.is_string()) fault(FaultKind::kTypeError, describe(fn, v, "string"));
  return v.as_string();
}

Value position_value(games::Position p) {
  return Value::pair(Value(static_cast<std::int64_t>(p.row)),
                     Value(static_cast<std::int64_t>(p.col)));
}

games::Position want_position(std::string_view fn, const Value& v, int n) {
  if (!v.is_pair() || !v.as_pair().first.is_int() || !v.as_pair().second.is_int()) {
    fault(FaultKind::kTypeError, std::string(fn) + ": expected a (row, col) pair");
  }
  const auto row = v.as_pair().first.as_int();
  const auto col = v.as_pair().second.as_int();
  if (row < 0 || row >= n || col < 0 || col >= n) {
    fault(FaultKind::kIndexOutOfRange,
          std::string(fn) + ": position " + to_display(v) + " is off the board");
  }
  return {static_cast<int>(row), static_cast<int>(col)};
}

const CoinView& want_coin(std::string_view fn, const Bindings& env) {
  if (!env.coin) {
    fault(FaultKind::kTypeError, std::string(fn) + ": no Coin Game observation bound");
  }
  return *env.coin;
}

std::int64_t count_substring(const std::string& hay, const std::string& needle) {
  if (needle.empty()) return 0;
  std::int64_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

void check_list_cap(std::string_view fn, std::size_t size, const Budget& budget) {
  if (size > budget.list_length_cap) {
    fault(FaultKind::kLengthCapExceeded,
          std::string(fn) + ": list length " + std::to_string(size) +
              " exceeds cap " + std::to_string(budget.list_length_cap));
  }
}

}  // namespace

Value builtin_call(std::string_view name, std::span<const Value> args,
                   const Bindings& env, Rng& rng, const Budget& budget) {
  const auto* info = slang::find_builtin(name);
  if (info == nullptr) {
    throw std::invalid_argument("unknown builtin '" + std::string(name) + "'");
  }
  if (static_cast<int>(args.size()) != info->arity) {
    throw std::invalid_argument("wrong arity for builtin '" + std::string(name) + "'");
  }

  if (name == "len") {
    if (args[0].is_string()) return static_cast<std::int64_t>(args[0].as_string().size());
    return static_cast<std::int64_t>(want_list(name, args[0]).size());
  }
  if (name == "last") {
    const auto& items = want_list(name, args[0]);
    const auto k = want_int(name, args[1]);
    if (k < 0) fault(FaultKind::kIndexOutOfRange, "last: negative count");
    const auto take = std::min<std::size_t>(static_cast<std::size_t>(k), items.size());
    return Value::list(List(items.end() - static_cast<std::ptrdiff_t>(take), items.end()));
  }
  if (name == "count") {
    if (args[0].is_string()) {
      return count_substring(args[0].as_string(), want_string(name, args[1]));
    }
    const auto& items = want_list(name, args[0]);
    return static_cast<std::int64_t>(std::count(items.begin(), items.end(), args[1]));
  }
  if (name == "contains") {
    if (args[0].is_string()) {
      return args[0].as_string().find(want_string(name, args[1])) != std::string::npos;
    }
    const auto& items = want_list(name, args[0]);
    return std::find(items.begin(), items.end(), args[1]) != items.end();
  }
  if (name == "append") {
    List items = want_list(name, args[0]);
    check_list_cap(name, items.size() + 1, budget);
    items.push_back(args[1]);
    return Value::list(std::move(items));
  }
  if (name == "range") {
    const auto n = want_int(name, args[0]);
    if (n <= 0) return Value::list({});
    check_list_cap(name, static_cast<std::size_t>(n), budget);
    List items;
    items.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) items.emplace_back(i);
    return Value::list(std::move(items));
  }
  if (name == "abs") {
    const auto v = want_int(name, args[0]);
    if (v == INT64_MIN) fault(FaultKind::kTypeError, "abs: integer overflow");
    return v < 0 ? -v : v;
  }
  if (name == "min") return std::min(want_int(name, args[0]), want_int(name, args[1]));
  if (name == "max") return std::max(want_int(name, args[0]), want_int(name, args[1]));
  if (name == "rand_int") {
    const auto lo = want_int(name, args[0]);
    const auto hi = want_int(name, args[1]);
    if (lo > hi) fault(FaultKind::kTypeError, "rand_int: empty range");
    return rng.uniform(lo, hi);
  }
  if (name == "choice") {
    const auto& items = want_list(name, args[0]);
    if (items.empty()) fault(FaultKind::kIndexOutOfRange, "choice: empty list");
    return items[rng.below(items.size())];
  }
  if (name == "str") {
    if (args[0].is_string()) return args[0];
    if (args[0].is_int()) return std::to_string(args[0].as_int());
    return to_display(args[0]);
  }
  if (name == "my_pos") return position_value(want_coin(name, env).my_pos);
  if (name == "opp_pos") return position_value(want_coin(name, env).opp_pos);
  if (name == "my_coin") return position_value(want_coin(name, env).my_coin);
  if (name == "opp_coin") return position_value(want_coin(name, env).opp_coin);
  if (name == "board_size") return static_cast<std::int64_t>(want_coin(name, env).n);
  if (name == "wrap_dist") {
    const int n = want_coin(name, env).n;
    return static_cast<std::int64_t>(games::wrap_distance(
        want_position(name, args[0], n), want_position(name, args[1], n), n));
  }
  if (name == "adjacent") {
    const int n = want_coin(name, env).n;
    List out;
    for (const auto& [move, pos] : games::adjacent(want_position(name, args[0], n), n)) {
      out.push_back(Value::pair(std::string(games::to_string(move)), position_value(pos)));
    }
    return Value::list(std::move(out));
  }
  throw std::invalid_argument("builtin '" + std::string(name) + "' has no implementation");
}

}  // namespace osg::runtime
