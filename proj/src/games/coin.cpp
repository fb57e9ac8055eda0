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

#include "osgame/games/coin.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace osg::games {
namespace {

int wrap(int v, int n) { return ((v % n) + n) % n; }

bool in_range(Position p, int n) {
  return p.row >= 0 && p.row < n && p.col >= 0 && p.col < n;
}

Position respawn(const CoinState& s, Position other_coin, Rng& rng) {
  std::vector<Position> free;
  for (int r = 0; r < s.n; ++r) {
    for (int c = 0; c < s.n; ++c) {
      const Position p{r, c};
      if (p != s.pos_a && p != s.pos_b && p != other_coin) free.push_back(p);
    }
  }
  // n >= 2 leaves at least one free cell: 4 cells minus at most 3 occupied.
  return free[rng.below(free.size())];
}

}  // namespace

std::string_view to_string(Move m) {
  switch (m) {
    case Move::kUp: return "UP";
    case Move::kDown: return "DOWN";
    case Move::kLeft: return "LEFT";
    case Move::kRight: return "RIGHT";
  }
  return "?";
}

std::optional<Move> parse_move(std::string_view s) {
  for (Move m : kAllMoves) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

std::string_view to_string(Player p) { return p == Player::kA ? "A" : "B"; }
std::string_view to_string(CoinColor c) { return c == CoinColor::kRed ? "red" : "blue"; }

int wrap_distance(Position p, Position q, int n) {
  const int dr = std::abs(p.row - q.row);
  const int dc = std::abs(p.col - q.col);
  return std::min(dr, n - dr) + std::min(dc, n - dc);
}

Position apply_move(Position p, Move m, int n) {
  switch (m) {
    case Move::kUp: return {wrap(p.row - 1, n), p.col};
    case Move::kDown: return {wrap(p.row + 1, n), p.col};
    case Move::kLeft: return {p.row, wrap(p.col - 1, n)};
    case Move::kRight: return {p.row, wrap(p.col + 1, n)};
  }
  return p;
}

std::array<std::pair<Move, Position>, 4> adjacent(Position p, int n) {
  std::array<std::pair<Move, Position>, 4> out;
  for (std::size_t i = 0; i < kAllMoves.size(); ++i) {
    out[i] = {kAllMoves[i], apply_move(p, kAllMoves[i], n)};
  }
  return out;
}

CoinState initial_coin_state(int n, std::uint64_t seed, int max_steps) {
  if (n < 2) throw std::invalid_argument("coin game board size must be at least 2");
  if (max_steps < 0) throw std::invalid_argument("max_steps must be non-negative");
  Rng rng(seed);
  std::vector<int> cells(static_cast<std::size_t>(n * n));
  std::iota(cells.begin(), cells.end(), 0);
  // Partial Fisher-Yates: the first four slots become the draw.
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t j = i + rng.below(cells.size() - i);
    std::swap(cells[i], cells[j]);
  }
  auto at = [n](int cell) { return Position{cell / n, cell % n}; };
  CoinState s;
  s.n = n;
  s.pos_a = at(cells[0]);
  s.pos_b = at(cells[1]);
  s.coin_red = at(cells[2]);
  s.coin_blue = at(cells[3]);
  s.max_steps = max_steps;
  return s;
}

CoinStepResult coin_step(const CoinState& s, Move move_a, Move move_b, Rng& rng) {
  if (s.step_index >= s.max_steps) throw std::logic_error("coin game episode is over");
  CoinStepResult out;
  CoinState& next = out.state;
  next = s;
  next.pos_a = apply_move(s.pos_a, move_a, s.n);
  next.pos_b = apply_move(s.pos_b, move_b, s.n);
  const int step = s.step_index;

  bool red_taken = false;
  bool blue_taken = false;
  for (Player who : {Player::kA, Player::kB}) {
    const Position at = next.player_pos(who);
    for (CoinColor color : {CoinColor::kRed, CoinColor::kBlue}) {
      if (at != s.coin_pos(color)) continue;
      out.events.push_back({who, color, at, step});
      int& collector = who == Player::kA ? out.delta_a : out.delta_b;
      collector += 1;
      if (color != own_color(who)) {
        int& owner = who == Player::kA ? out.delta_b : out.delta_a;
        owner -= 2;
      }
      (color == CoinColor::kRed ? red_taken : blue_taken) = true;
    }
  }
  // Red first, then blue against red's final cell.
  if (red_taken) next.coin_red = respawn(next, next.coin_blue, rng);
  if (blue_taken) next.coin_blue = respawn(next, next.coin_red, rng);
  next.step_index = step + 1;
  return out;
}

bool coin_state_valid(const CoinState& s) {
  return s.n >= 2 && in_range(s.pos_a, s.n) && in_range(s.pos_b, s.n) &&
         in_range(s.coin_red, s.n) && in_range(s.coin_blue, s.n) &&
         s.coin_red != s.coin_blue && s.step_index >= 0 &&
         s.step_index <= s.max_steps;
}

}  // namespace osg::games
