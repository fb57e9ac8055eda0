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

#include "osgame/games/ipd.hpp"

#include <stdexcept>

namespace osg::games {

std::string_view to_string(IpdAction a) { return a == IpdAction::kC ? "C" : "D"; }

std::optional<IpdAction> parse_ipd_action(std::string_view s) {
  if (s == "C") return IpdAction::kC;
  if (s == "D") return IpdAction::kD;
  return std::nullopt;
}

bool PayoffParams::valid() const {
  return temptation > reward && reward > punishment && punishment > sucker &&
         2 * reward > temptation + sucker;
}

void check_payoff_params(const PayoffParams& params) {
  if (!params.valid()) {
    throw std::invalid_argument(
        "payoffs must satisfy T > R > P > S and 2R > T + S");
  }
}

std::pair<int, int> ipd_payoff(IpdAction a, IpdAction b, const PayoffParams& p) {
  if (a == IpdAction::kC) {
    return b == IpdAction::kC ? std::pair{p.reward, p.reward}
                              : std::pair{p.sucker, p.temptation};
  }
  return b == IpdAction::kC ? std::pair{p.temptation, p.sucker}
                            : std::pair{p.punishment, p.punishment};
}

}  // namespace osg::games
