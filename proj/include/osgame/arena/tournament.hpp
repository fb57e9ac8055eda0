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
#include <functional>
#include <string>
#include <vector>

#include "osgame/arena/match.hpp"

namespace osg::arena {

struct TypedProgram {
  std::string tag;
  slang::StrategyProgram program;
};

struct PairSample {
  std::uint64_t seed = 0;
  int payoff = 0;           // row type's total
  int opponent_payoff = 0;  // column type's total

  bool operator==(const PairSample&) const = default;
};

struct TournamentTable {
  std::vector<std::string> tags;
  // mean[i][j]: mean total of type i when playing as A against type j.
  std::vector<std::vector<double>> mean;
  std::vector<std::vector<std::vector<PairSample>>> samples;
};

// Seed of repetition `rep` of the ordered pairing (i, j).
std::uint64_t pairing_seed(std::uint64_t base, std::size_t i, std::size_t j,
                           std::size_t n, int rep);

// Runs fn(0..count-1) on up to `jobs` threads. Exceptions propagate.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

// Every ordered pair (i, j), self-play included, plays `repetitions`
// matches with distinct derived seeds. Throws std::invalid_argument for
// fewer than two types or repetitions < 1.
TournamentTable round_robin(const std::vector<TypedProgram>& types,
                            const MatchConfig& cfg, int repetitions, int jobs = 1);

}  // namespace osg::arena
