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

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "osgame/rng.hpp"

namespace osg::games {

// Coin Game on an n x n torus. Player A owns the red coin, player B the blue.

enum class Move { kUp, kDown, kLeft, kRight };

inline constexpr std::array<Move, 4> kAllMoves = {Move::kUp, Move::kDown,
                                                  Move::kLeft, Move::kRight};

std::string_view to_string(Move m);
std::optional<Move> parse_move(std::string_view s);

enum class Player { kA = 0, kB = 1 };
enum class CoinColor { kRed, kBlue };

std::string_view to_string(Player p);
std::string_view to_string(CoinColor c);
constexpr CoinColor own_color(Player p) {
  return p == Player::kA ? CoinColor::kRed : CoinColor::kBlue;
}

struct Position {
  int row = 0;
  int col = 0;

  bool operator==(const Position&) const = default;
};

// Shortest path length on the n x n torus: sum over axes of min(|d|, n - |d|).
int wrap_distance(Position p, Position q, int n);

// The four neighbours in move order UP, DOWN, LEFT, RIGHT.
// UP decreases the row, LEFT decreases the column, both modulo n.
std::array<std::pair<Move, Position>, 4> adjacent(Position p, int n);
Position apply_move(Position p, Move m, int n);

inline constexpr int kDefaultBoardSize = 3;
inline constexpr int kDefaultMaxSteps = 10;

struct CoinState {
  int n = kDefaultBoardSize;
  Position pos_a;
  Position pos_b;
  Position coin_red;
  Position coin_blue;
  int step_index = 0;
  int max_steps = kDefaultMaxSteps;

  const Position& player_pos(Player p) const { return p == Player::kA ? pos_a : pos_b; }
  const Position& coin_pos(CoinColor c) const {
    return c == CoinColor::kRed ? coin_red : coin_blue;
  }
  bool operator==(const CoinState&) const = default;
};

struct CoinEvent {
  Player collector = Player::kA;
  CoinColor color = CoinColor::kRed;
  Position cell;
  int step = 0;

  bool operator==(const CoinEvent&) const = default;
};

struct CoinStepResult {
  CoinState state;
  int delta_a = 0;
  int delta_b = 0;
  std::vector<CoinEvent> events;
};

// Four distinct cells for (pos_a, pos_b, coin_red, coin_blue), drawn without
// replacement from a stream seeded with `seed`. Throws std::invalid_argument
// for n < 2.
CoinState initial_coin_state(int n, std::uint64_t seed,
                             int max_steps = kDefaultMaxSteps);

// One simultaneous move. A player ending on a coin collects it (+1); taking
// the other player's colour also costs the owner 2. Collected coins respawn
// uniformly on cells not occupied by a player or the other coin.
// Throws std::logic_error if the episode is already over.
CoinStepResult coin_step(const CoinState& s, Move move_a, Move move_b, Rng& rng);

// True iff state invariants hold (cells in range, coins on distinct cells).
bool coin_state_valid(const CoinState& s);

}  // namespace osg::games
