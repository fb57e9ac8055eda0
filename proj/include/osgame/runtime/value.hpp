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
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace osg::runtime {

class Value;
using List = std::vector<Value>;

struct Unit {
  bool operator==(const Unit&) const = default;
};

// Immutable SLANG value. Lists and pairs share their storage, so copies are
// cheap; nothing in the language mutates a value in place.
class Value {
 public:
  using ListPtr = std::shared_ptr<const List>;
  using PairPtr = std::shared_ptr<const std::pair<Value, Value>>;

  Value() : data_(Unit{}) {}
  Value(std::int64_t i) : data_(i) {}  // NOLINT
  Value(int i) : data_(static_cast<std::int64_t>(i)) {}  // NOLINT
  Value(bool b) : data_(b) {}          // NOLINT
  Value(std::string s) : data_(std::move(s)) {}  // NOLINT
  Value(const char* s) : data_(std::string(s)) {}  // NOLINT

  static Value list(List items);
  static Value pair(Value first, Value second);

  bool is_unit() const { return std::holds_alternative<Unit>(data_); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(data_); }
  bool is_bool() const { return std::holds_alternative<bool>(data_); }
  bool is_string() const { return std::holds_alternative<std::string>(data_); }
  bool is_list() const { return std::holds_alternative<ListPtr>(data_); }
  bool is_pair() const { return std::holds_alternative<PairPtr>(data_); }

  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  bool as_bool() const { return std::get<bool>(data_); }
  const std::string& as_string() const { return std::get<std::string>(data_); }
  const List& as_list() const { return *std::get<ListPtr>(data_); }
  const std::pair<Value, Value>& as_pair() const { return *std::get<PairPtr>(data_); }

  // "int", "bool", "string", "list", "pair" or "unit".
  const char* type_name() const;

  // Structural equality; values of different types are unequal.
  friend bool operator==(const Value& a, const Value& b);

 private:
  std::variant<Unit, std::int64_t, bool, std::string, ListPtr, PairPtr> data_;
};

// Source-like text: 3, true, "C", ["C", "D"], (0, 1), unit.
std::string to_display(const Value& v);

}  // namespace osg::runtime
