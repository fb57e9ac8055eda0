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

#include <string>
#include <vector>

#include "osgame/arena/records.hpp"
#include "osgame/arena/tournament.hpp"
#include "osgame/evolution/fixed_points.hpp"
#include "osgame/evolution/replicator.hpp"

namespace osg::evolution {

// The one place matches default to more than 10 rounds.
inline constexpr int kEvolutionRounds = 50;

struct PayoffMatrix {
  std::vector<std::string> tags;
  Matrix entries;  // entries(i, j): mean payoff of type i against type j
  // Per-cell samples; empty when the matrix was read from a file.
  std::vector<std::vector<std::vector<arena::PairSample>>> samples;

  Eigen::Index size() const { return entries.rows(); }
};

// Mean payoffs from arena::round_robin; samples are kept.
PayoffMatrix estimate_payoff_matrix(const std::vector<arena::TypedProgram>& types,
                                    const arena::MatchConfig& cfg, int repetitions,
                                    int jobs = 1);

// {"schema_version":1,"tags":[...],"entries":[[...],...]}. Throws
// std::invalid_argument for non-square, non-numeric or non-finite entries.
PayoffMatrix payoff_matrix_from_json(const arena::Json& j);
arena::Json to_json(const PayoffMatrix& m);

// Exports for external plotting.
std::string trajectory_csv(const Trajectory& t, const std::vector<std::string>& tags);
std::string flow_csv(const std::vector<FlowSample>& samples,
                     const std::vector<std::string>& tags);
arena::Json to_json(const std::vector<FlowSample>& samples,
                    const std::vector<std::string>& tags);
arena::Json to_json(const FixedPointReport& report, const std::vector<std::string>& tags);

}  // namespace osg::evolution
