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

#include <doctest.h>

#include <deque>
#include <set>

#include "osgame/games/coin.hpp"
#include "osgame/games/game_kind.hpp"
#include "osgame/games/ipd.hpp"

using namespace osg;
using namespace osg::games;

namespace {

// Breadth-first search on the torus graph; independent of wrap_distance.
int bfs_distance(Position from, Position to, int n) {
  std::vector<int> dist(static_cast<std::size_t>(n * n), -1);
  auto id = [n](Position p) { return static_cast<std::size_t>(p.row * n + p.col); };
  std::deque<Position> q{from};
  dist[id(from)] = 0;
  while (!q.empty()) {
    const Position p = q.front();
    q.pop_front();
    if (p == to) return dist[id(p)];
    const Position nbrs[4] = {{(p.row + n - 1) % n, p.col}, {(p.row + 1) % n, p.col},
                              {p.row, (p.col + n - 1) % n}, {p.row, (p.col + 1) % n}};
    for (const auto& q2 : nbrs) {
      if (dist[id(q2)] < 0) {
        dist[id(q2)] = dist[id(p)] + 1;
        q.push_back(q2);
      }
    }
  }
  return -1;
}

CoinState board(Position a, Position b, Position red, Position blue) {
  CoinState s;
  s.n = 3;
  s.pos_a = a;
  s.pos_b = b;
  s.coin_red = red;
  s.coin_blue = blue;
  return s;
}

}  // namespace

TEST_SUITE("games") {

TEST_CASE("IPD payoff table") {
  CHECK(ipd_payoff(IpdAction::kC, IpdAction::kC) == std::pair{3, 3});
  CHECK(ipd_payoff(IpdAction::kD, IpdAction::kC) == std::pair{5, 0});
  CHECK(ipd_payoff(IpdAction::kC, IpdAction::kD) == std::pair{0, 5});
  CHECK(ipd_payoff(IpdAction::kD, IpdAction::kD) == std::pair{1, 1});
}

TEST_CASE("payoff parameters must keep the dilemma") {
  CHECK(PayoffParams{}.valid());
  CHECK_FALSE(PayoffParams{3, 5, 1, 0}.valid());
  CHECK_FALSE(PayoffParams{10, 3, 1, 0}.valid());  // 2R <= T + S
  CHECK_THROWS_AS(check_payoff_params({1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("game names and legal actions") {
  CHECK(parse_game_name("coin") == GameKind::kCoin);
  CHECK_FALSE(parse_game_name("chess").has_value());
  CHECK(is_legal_action(GameKind::kIpd, "D"));
  CHECK_FALSE(is_legal_action(GameKind::kIpd, "UP"));
  CHECK(is_legal_action(GameKind::kCoin, "LEFT"));
  CHECK(default_fallback(GameKind::kIpd) == "D");
  CHECK(default_fallback(GameKind::kCoin) == "UP");
}

TEST_CASE("moves wrap; UP decreases the row, LEFT the column") {
  CHECK(apply_move({0, 0}, Move::kUp, 3) == Position{2, 0});
  CHECK(apply_move({2, 1}, Move::kDown, 3) == Position{0, 1});
  CHECK(apply_move({1, 0}, Move::kLeft, 3) == Position{1, 2});
  CHECK(apply_move({1, 2}, Move::kRight, 3) == Position{1, 0});
  const auto adj = adjacent({1, 1}, 3);
  CHECK(adj[0].first == Move::kUp);
  CHECK(adj[3].second == Position{1, 2});
}

TEST_CASE("wrap_distance equals BFS on the torus") {
  for (int n = 2; n <= 6; ++n) {
    for (int a = 0; a < n * n; ++a) {
      for (int b = 0; b < n * n; ++b) {
        const Position p{a / n, a % n};
        const Position q{b / n, b % n};
        CHECK(wrap_distance(p, q, n) == bfs_distance(p, q, n));
      }
    }
  }
}

TEST_CASE("initial layout puts four things on distinct cells") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = initial_coin_state(3, seed);
    std::set<std::pair<int, int>> cells{{s.pos_a.row, s.pos_a.col},
                                        {s.pos_b.row, s.pos_b.col},
                                        {s.coin_red.row, s.coin_red.col},
                                        {s.coin_blue.row, s.coin_blue.col}};
    CHECK(cells.size() == 4);
    CHECK(coin_state_valid(s));
  }
  CHECK(initial_coin_state(3, 9) == initial_coin_state(3, 9));
  CHECK_THROWS_AS(initial_coin_state(1, 0), std::invalid_argument);
}

TEST_CASE("own collect scores +1") {
  Rng rng(1);
  const auto r = coin_step(board({0, 0}, {2, 2}, {0, 1}, {1, 1}), Move::kRight, Move::kUp, rng);
  CHECK(r.delta_a == 1);
  CHECK(r.delta_b == 0);
  REQUIRE(r.events.size() == 1);
  CHECK(r.events[0].color == CoinColor::kRed);
  CHECK(r.state.coin_red != Position{0, 1});
  CHECK(coin_state_valid(r.state));
}

TEST_CASE("cross collect scores +1 for the taker and -2 for the owner") {
  Rng rng(1);
  const auto r = coin_step(board({0, 0}, {2, 2}, {1, 1}, {0, 1}), Move::kRight, Move::kLeft, rng);
  CHECK(r.delta_a == 1);
  CHECK(r.delta_b == -2);
}

TEST_CASE("both players on one coin both collect") {
  Rng rng(1);
  const auto r = coin_step(board({0, 0}, {0, 2}, {0, 1}, {2, 2}), Move::kRight, Move::kLeft, rng);
  CHECK(r.delta_a == 1 - 2);  // own collect, then B takes red too
  CHECK(r.delta_b == 1);
  CHECK(r.events.size() == 2);
}

TEST_CASE("respawn avoids players and the other coin") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const auto r = coin_step(board({0, 0}, {2, 2}, {0, 1}, {1, 1}), Move::kRight, Move::kUp, rng);
    CHECK(r.state.coin_red != r.state.pos_a);
    CHECK(r.state.coin_red != r.state.pos_b);
    CHECK(r.state.coin_red != r.state.coin_blue);
  }
}

TEST_CASE("episode ends at max_steps") {
  auto s = initial_coin_state(3, 5, 2);
  Rng rng(0);
  s = coin_step(s, Move::kUp, Move::kUp, rng).state;
  s = coin_step(s, Move::kUp, Move::kUp, rng).state;
  CHECK_THROWS_AS(coin_step(s, Move::kUp, Move::kUp, rng), std::logic_error);
}

}  // TEST_SUITE
