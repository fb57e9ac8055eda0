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

#include "osgame/arena/tournament.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace osg::arena {

std::uint64_t pairing_seed(std::uint64_t base, std::size_t i, std::size_t j,
                           std::size_t n, int rep) {
  return derive_seed(base, static_cast<std::uint64_t>(i * n + j),
                     static_cast<std::uint64_t>(rep));
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

TournamentTable round_robin(const std::vector<TypedProgram>& types,
                            const MatchConfig& cfg, int repetitions, int jobs) {
  if (types.size() < 2) throw std::invalid_argument("a tournament needs at least two types");
  if (repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  cfg.check();
  const std::size_t n = types.size();
  TournamentTable table;
  for (const auto& t : types) table.tags.push_back(t.tag);
  table.mean.assign(n, std::vector<double>(n, 0.0));
  table.samples.assign(n, std::vector<std::vector<PairSample>>(
                              n, std::vector<PairSample>(static_cast<std::size_t>(repetitions))));

  const std::size_t reps = static_cast<std::size_t>(repetitions);
  parallel_for(n * n * reps, jobs, [&](std::size_t job) {
    const std::size_t rep = job % reps;
    const std::size_t pair = job / reps;
    const std::size_t i = pair / n;
    const std::size_t j = pair % n;
    MatchConfig mcfg = cfg;
    mcfg.seed = pairing_seed(cfg.seed, i, j, n, static_cast<int>(rep));
    const MatchRecord rec = play_match(types[i].program, types[j].program, mcfg);
    table.samples[i][j][rep] = {mcfg.seed, rec.total_a, rec.total_b};
  });

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      for (const auto& s : table.samples[i][j]) sum += s.payoff;
      table.mean[i][j] = sum / static_cast<double>(repetitions);
    }
  }
  return table;
}

}  // namespace osg::arena
