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

#include "osgame/arena/match.hpp"

#include <stdexcept>

namespace osg::arena {

using games::GameKind;
using games::Player;

std::string MatchConfig::resolved_fallback() const {
  return fallback.empty() ? std::string(games::default_fallback(game)) : fallback;
}

void MatchConfig::check() const {
  if (rounds <= 0) throw std::invalid_argument("rounds must be positive");
  if (!games::is_legal_action(game, resolved_fallback())) {
    throw std::invalid_argument("fallback '" + fallback + "' is not a legal " +
                                std::string(games::game_name(game)) + " action");
  }
  if (!budget.valid()) throw std::invalid_argument("budget limits must be positive");
  if (game == GameKind::kIpd) games::check_payoff_params(payoff);
  if (game == GameKind::kCoin && board_size < 2) {
    throw std::invalid_argument("coin game board size must be at least 2");
  }
}

std::vector<std::string> MatchRecord::actions(Player p) const {
  std::vector<std::string> out;
  out.reserve(rounds.size());
  for (const auto& r : rounds) out.push_back(p == Player::kA ? r.action_a : r.action_b);
  return out;
}

std::uint64_t program_stream_seed(std::uint64_t match_seed, Player p, int round) {
  return derive_seed(match_seed, static_cast<std::uint64_t>(p),
                     static_cast<std::uint64_t>(round));
}

namespace {

constexpr std::uint64_t kLayoutStream = 2;
constexpr std::uint64_t kRespawnStream = 3;

runtime::CoinView view_for(const games::CoinState& s, Player p) {
  runtime::CoinView v;
  v.n = s.n;
  const Player other = p == Player::kA ? Player::kB : Player::kA;
  v.my_pos = s.player_pos(p);
  v.opp_pos = s.player_pos(other);
  v.my_coin = s.coin_pos(games::own_color(p));
  v.opp_coin = s.coin_pos(games::own_color(other));
  return v;
}

struct Side {
  const slang::StrategyProgram* program;
  const slang::StrategyProgram* opponent;
  Player id;
};

}  // namespace

MatchRecord play_match(const slang::StrategyProgram& a,
                       const slang::StrategyProgram& b, const MatchConfig& cfg,
                       bool b_first) {
  cfg.check();
  MatchRecord rec;
  rec.config = cfg;
  rec.config.fallback = cfg.resolved_fallback();
  rec.source_a = a.source.text;
  rec.source_b = b.source.text;
  rec.rng_algorithm = std::string(Rng::kAlgorithm);
  const std::string fallback = cfg.resolved_fallback();

  std::optional<games::CoinState> coin;
  if (cfg.game == GameKind::kCoin) {
    coin = games::initial_coin_state(cfg.board_size, derive_seed(cfg.seed, kLayoutStream),
                                     cfg.rounds);
    rec.initial_state = coin;
  }

  std::vector<std::string> hist_a;
  std::vector<std::string> hist_b;
  const Side sides[2] = {{&a, &b, Player::kA}, {&b, &a, Player::kB}};

  for (int round = 0; round < cfg.rounds; ++round) {
    std::string action[2];
    std::uint64_t steps[2] = {0, 0};
    std::optional<runtime::RuntimeFault> faults[2];
    for (int k = 0; k < 2; ++k) {
      const Side& side = sides[b_first ? 1 - k : k];
      const int idx = static_cast<int>(side.id);
      runtime::Bindings env;
      env.game = cfg.game;
      env.my_history = side.id == Player::kA ? hist_a : hist_b;
      env.opp_history = side.id == Player::kA ? hist_b : hist_a;
      env.my_source = side.program->source.text;
      env.opp_source = side.opponent->source.text;
      env.round_index = round;
      if (coin) env.coin = view_for(*coin, side.id);

      Rng rng(program_stream_seed(cfg.seed, side.id, round));
      auto result = runtime::evaluate(side.program->tree, env, cfg.budget, rng);
      steps[idx] = result.steps;
      if (result.ok()) {
        action[idx] = result.action();
      } else {
        action[idx] = fallback;
        faults[idx] = std::move(result.fault);
      }
    }
    for (int idx = 0; idx < 2; ++idx) {
      if (faults[idx]) rec.faults.push_back({round + 1, static_cast<Player>(idx), *faults[idx]});
    }

    RoundRecord r;
    r.action_a = action[0];
    r.action_b = action[1];
    r.steps_a = steps[0];
    r.steps_b = steps[1];
    if (cfg.game == GameKind::kIpd) {
      const auto [pa, pb] = games::ipd_payoff(*games::parse_ipd_action(action[0]),
                                              *games::parse_ipd_action(action[1]),
                                              cfg.payoff);
      r.delta_a = pa;
      r.delta_b = pb;
    } else {
      Rng rng(derive_seed(cfg.seed, kRespawnStream, static_cast<std::uint64_t>(round)));
      auto step = games::coin_step(*coin, *games::parse_move(action[0]),
                                   *games::parse_move(action[1]), rng);
      r.delta_a = step.delta_a;
      r.delta_b = step.delta_b;
      r.events = std::move(step.events);
      coin = step.state;
    }
    rec.total_a += r.delta_a;
    rec.total_b += r.delta_b;
    hist_a.push_back(r.action_a);
    hist_b.push_back(r.action_b);
    rec.rounds.push_back(std::move(r));
  }
  return rec;
}

}  // namespace osg::arena
