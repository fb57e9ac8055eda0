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

#include <optional>
#include <string_view>
#include <utility>

namespace osg::games {

enum class IpdAction { kC, kD };

std::string_view to_string(IpdAction a);
std::optional<IpdAction> parse_ipd_action(std::string_view s);

// Prisoner's Dilemma payoffs. Defaults are the traditional T=5, R=3, P=1, S=0.
struct PayoffParams {
  int temptation = 5;
  int reward = 3;
  int punishment = 1;
  int sucker = 0;

  // T > R > P > S and 2R > T + S.
  bool valid() const;
  bool operator==(const PayoffParams&) const = default;
};

// Throws std::invalid_argument when `params` violates the PD ordering.
void check_payoff_params(const PayoffParams& params);

// (points for a, points for b).
std::pair<int, int> ipd_payoff(IpdAction a, IpdAction b,
                               const PayoffParams& params = {});

}  // namespace osg::games
