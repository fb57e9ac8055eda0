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

#include "osgame/arena/meta_game.hpp"

#include <stdexcept>

#include "osgame/arena/records.hpp"
#include "osgame/arena/subprocess.hpp"

namespace osg::arena {

using games::Player;

std::string_view judge_feature_key(JudgeFeature f) {
  switch (f) {
    case JudgeFeature::kIndependentDevelopment: return "independent_development";
    case JudgeFeature::kExploitationAttempt: return "exploitation_attempt";
    case JudgeFeature::kCounterMeasure: return "counter_measure";
    case JudgeFeature::kDirectImitation: return "direct_imitation";
    case JudgeFeature::kFeint: return "feint";
  }
  return "independent_development";
}

std::uint64_t meta_round_seed(std::uint64_t run_seed, int meta_round) {
  return derive_seed(run_seed, 0x6D657461ULL, static_cast<std::uint64_t>(meta_round));
}

ExternalJudge::ExternalJudge(std::vector<std::string> argv, games::GameKind game,
                             std::chrono::milliseconds timeout)
    : timeout_(timeout) {
  std::vector<std::string> transcript;
  try {
    child_ = std::make_unique<ChildProcess>(argv);
  } catch (const std::exception& e) {
    throw ProtocolError(e.what(), transcript);
  }
  Json hello;
  hello["type"] = "hello";
  hello["protocol"] = kProtocolVersion;
  hello["game"] = games::game_name(game);
  hello["role"] = "judge";
  transcript.push_back("> " + hello.dump());
  if (!child_->write_line(hello.dump())) throw ProtocolError("judge closed its input", transcript);
  auto reply = child_->read_line(timeout_);
  if (!reply) throw ProtocolError("no handshake reply from judge", transcript);
  transcript.push_back("< " + *reply);
  Json j = Json::parse(*reply, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("type", "") != "ready") {
    throw ProtocolError("expected {\"type\":\"ready\"} from judge", transcript);
  }
}

ExternalJudge::~ExternalJudge() = default;

std::optional<JudgeLabels> ExternalJudge::judge(int meta_round, Player player,
                                                const std::string& source,
                                                const std::string& opponent_previous_source) {
  if (!child_->alive()) return std::nullopt;
  Json msg;
  msg["type"] = "judge";
  msg["meta_round"] = meta_round;
  msg["player"] = games::to_string(player);
  msg["source"] = source;
  msg["opponent_previous_source"] = opponent_previous_source;
  if (!child_->write_line(msg.dump())) return std::nullopt;
  auto reply = child_->read_line(timeout_);
  if (!reply) {
    child_->terminate();
    return std::nullopt;
  }
  Json j = Json::parse(*reply, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("type", "") != "labels" ||
      !j.contains("features")) {
    return std::nullopt;
  }
  try {
    return judge_labels_from_json(j["features"]);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

namespace {

MetaHistoryEntry history_entry(const MetaRound& r, Player me) {
  const bool a = me == Player::kA;
  MetaHistoryEntry e;
  e.meta_round = r.meta_round;
  e.my_source = a ? r.source_a : r.source_b;
  e.opponent_source = a ? r.source_b : r.source_a;
  e.my_actions = r.match.actions(me);
  e.opponent_actions = r.match.actions(a ? Player::kB : Player::kA);
  e.my_total = a ? r.match.total_a : r.match.total_b;
  e.opponent_total = a ? r.match.total_b : r.match.total_a;
  return e;
}

struct Submission {
  slang::StrategyProgram program;
  std::optional<std::string> fault;
};

Submission obtain(Provider& provider, Player me, int k, const MetaGameRecord& rec,
                  const std::optional<slang::StrategyProgram>& previous) {
  ProposalRequest req;
  req.meta_round = k;
  req.game = rec.config.game;
  for (const auto& r : rec.rounds) req.history.push_back(history_entry(r, me));
  if (!rec.rounds.empty()) {
    const auto& last = rec.rounds.back();
    req.opponent_previous_source = me == Player::kA ? last.source_b : last.source_a;
  }
  std::string error;
  Proposal p = provider.propose(req);
  if (p.source) {
    try {
      return {slang::load_program({*p.source, provider.id() + "@" + std::to_string(k)},
                                  rec.config.game),
              std::nullopt};
    } catch (const slang::ProgramError& e) {
      error = std::string("invalid program: ") + e.what();
    }
  } else {
    error = p.error.empty() ? "no program" : p.error;
  }
  if (!previous) {
    throw MetaGameAbort("provider '" + provider.id() + "' produced no valid program in meta-round 1: " +
                        error);
  }
  return {*previous, error};
}

}  // namespace

MetaGameRecord run_meta_game(Provider& a, Provider& b, int meta_rounds,
                             const MatchConfig& cfg, Judge* judge) {
  if (meta_rounds < 1) throw std::invalid_argument("meta_rounds must be at least 1");
  cfg.check();
  MetaGameRecord rec;
  rec.config = cfg;
  rec.config.fallback = cfg.resolved_fallback();
  rec.meta_rounds = meta_rounds;
  rec.provider_a = {a.id(), a.tag(), a.kind()};
  rec.provider_b = {b.id(), b.tag(), b.kind()};

  a.start(cfg.game);
  b.start(cfg.game);

  std::optional<slang::StrategyProgram> prev_a;
  std::optional<slang::StrategyProgram> prev_b;
  for (int k = 1; k <= meta_rounds; ++k) {
    Submission sa = obtain(a, Player::kA, k, rec, prev_a);
    Submission sb = obtain(b, Player::kB, k, rec, prev_b);

    MetaRound round;
    round.meta_round = k;
    round.source_a = sa.program.source.text;
    round.source_b = sb.program.source.text;
    if (sa.fault) round.provider_faults.push_back({Player::kA, *sa.fault});
    if (sb.fault) round.provider_faults.push_back({Player::kB, *sb.fault});

    MatchConfig mcfg = cfg;
    mcfg.seed = meta_round_seed(cfg.seed, k);
    round.match = play_match(sa.program, sb.program, mcfg);

    if (judge && k > 1) {
      const auto& last = rec.rounds.back();
      round.judge_a = judge->judge(k, Player::kA, round.source_a, last.source_b);
      round.judge_b = judge->judge(k, Player::kB, round.source_b, last.source_a);
    }
    rec.rounds.push_back(std::move(round));
    prev_a = std::move(sa.program);
    prev_b = std::move(sb.program);
  }
  return rec;
}

void merge_judge_labels(MetaGameRecord& record, const std::string& sidecar_json) {
  Json j = Json::parse(sidecar_json, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("labels") || !j["labels"].is_array()) {
    throw std::invalid_argument("judge sidecar must be an object with a \"labels\" array");
  }
  for (const auto& entry : j["labels"]) {
    if (!entry.is_object() || !entry.contains("meta_round") ||
        !entry["meta_round"].is_number_integer() || !entry.contains("player") ||
        !entry.contains("features")) {
      throw std::invalid_argument("judge label entries need meta_round, player and features");
    }
    const int k = entry["meta_round"].get<int>();
    if (k < 1 || k > static_cast<int>(record.rounds.size())) {
      throw std::invalid_argument("judge label for unknown meta-round " + std::to_string(k));
    }
    auto& round = record.rounds[static_cast<std::size_t>(k - 1)];
    const JudgeLabels labels = judge_labels_from_json(entry["features"]);
    if (entry["player"] == "A") round.judge_a = labels;
    else if (entry["player"] == "B") round.judge_b = labels;
    else throw std::invalid_argument("judge label player must be \"A\" or \"B\"");
  }
}

}  // namespace osg::arena
