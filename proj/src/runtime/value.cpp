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

#include "osgame/runtime/value.hpp"

#include "osgame/slang/token.hpp"

namespace osg::runtime {

Value Value::list(List items) {
  Value v;
  v.data_ = std::make_shared<const List>(std::move(items));
  return v;
}

Value Value::pair(Value first, Value second) {
  Value v;
  v.data_ = std::make_shared<const std::pair<Value, Value>>(std::move(first),
                                                            std::move(second));
  return v;
}

const char* Value::type_name() const {
  switch (data_.index()) {
    case 0: return "unit";
    case 1: return "int";
    case 2: return "bool";
    case 3: return "string";
    case 4: return "list";
    default: return "pair";
  }
}

bool operator==(const Value& a, const Value& b) {
  if (a.data_.index() != b.data_.index()) return false;
  if (a.is_list()) {
    const auto& la = std::get<Value::ListPtr>(a.data_);
    const auto& lb = std::get<Value::ListPtr>(b.data_);
    return la == lb || *la == *lb;
  }
  if (a.is_pair()) {
    const auto& pa = std::get<Value::PairPtr>(a.data_);
    const auto& pb = std::get<Value::PairPtr>(b.data_);
    return pa == pb || *pa == *pb;
  }
  return a.data_ == b.data_;
}

std::string to_display(const Value& v) {
  if (v.is_unit()) return "unit";
  if (v.is_int()) return std::to_string(v.as_int());
  if (v.is_bool()) return v.as_bool() ? "true" : "false";
  if (v.is_string()) return slang::encode_string_literal(v.as_string());
  if (v.is_pair()) {
    return "(" + to_display(v.as_pair().first) + ", " +
           to_display(v.as_pair().second) + ")";
  }
  std::string out = "[";
  const auto& items = v.as_list();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += to_display(items[i]);
  }
  return out + "]";
}

}  // namespace osg::runtime
