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

#include "osgame/arena/records.hpp"

#include <fstream>
#include <set>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace osg::arena {

using games::GameKind;
using games::Player;

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* key) {
  const Json& v = need(j, key);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    bad(std::string("ill-typed value for '") + key + "'");
  }
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const char* where) {
  if (!j.is_object()) bad(std::string(where) + " must be an object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items()) {
    if (!ok.count(k)) bad(std::string("unknown key '") + k + "' in " + where);
  }
}

Player parse_player(const Json& j) {
  if (j == "A") return Player::kA;
  if (j == "B") return Player::kB;
  bad("player must be \"A\" or \"B\"");
}

Json pos_json(games::Position p) { return Json::array({p.row, p.col}); }

games::Position pos_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    bad("position must be [row, col]");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

Json to_json(const MatchConfig& cfg) {
  Json j;
  j["game"] = games::game_name(cfg.game);
  j["rounds"] = cfg.rounds;
  j["payoff"] = {{"temptation", cfg.payoff.temptation},
                 {"reward", cfg.payoff.reward},
                 {"punishment", cfg.payoff.punishment},
                 {"sucker", cfg.payoff.sucker}};
  j["budget"] = {{"step_limit", cfg.budget.step_limit},
                 {"call_depth_limit", cfg.budget.call_depth_limit},
                 {"list_length_cap", cfg.budget.list_length_cap},
                 {"string_length_cap", cfg.budget.string_length_cap}};
  j["fallback"] = cfg.resolved_fallback();
  j["seed"] = cfg.seed;
  if (cfg.game == GameKind::kCoin) j["board_size"] = cfg.board_size;
  return j;
}

MatchConfig match_config_from_json(const Json& j, const MatchConfig& base) {
  check_keys(j, {"game", "rounds", "payoff", "budget", "fallback", "seed", "board_size"},
             "match config");
  MatchConfig cfg = base;
  if (j.contains("game")) {
    auto g = games::parse_game_name(get_as<std::string>(j, "game"));
    if (!g) bad("unknown game '" + j["game"].get<std::string>() + "'");
    if (*g != cfg.game && !j.contains("fallback")) cfg.fallback.clear();
    cfg.game = *g;
  }
  if (j.contains("rounds")) cfg.rounds = get_as<int>(j, "rounds");
  if (j.contains("payoff")) {
    const Json& p = j["payoff"];
    check_keys(p, {"temptation", "reward", "punishment", "sucker"}, "payoff");
    if (p.contains("temptation")) cfg.payoff.temptation = get_as<int>(p, "temptation");
    if (p.contains("reward")) cfg.payoff.reward = get_as<int>(p, "reward");
    if (p.contains("punishment")) cfg.payoff.punishment = get_as<int>(p, "punishment");
    if (p.contains("sucker")) cfg.payoff.sucker = get_as<int>(p, "sucker");
  }
  if (j.contains("budget")) {
    const Json& b = j["budget"];
    check_keys(b, {"step_limit", "call_depth_limit", "list_length_cap", "string_length_cap"},
               "budget");
    if (b.contains("step_limit")) cfg.budget.step_limit = get_as<std::uint64_t>(b, "step_limit");
    if (b.contains("call_depth_limit"))
      cfg.budget.call_depth_limit = get_as<int>(b, "call_depth_limit");
    if (b.contains("list_length_cap"))
      cfg.budget.list_length_cap = get_as<std::size_t>(b, "list_length_cap");
    if (b.contains("string_length_cap"))
      cfg.budget.string_length_cap = get_as<std::size_t>(b, "string_length_cap");
  }
  if (j.contains("fallback")) cfg.fallback = get_as<std::string>(j, "fallback");
  if (j.contains("seed")) cfg.seed = get_as<std::uint64_t>(j, "seed");
  if (j.contains("board_size")) cfg.board_size = get_as<int>(j, "board_size");
  return cfg;
}

Json to_json(const runtime::RuntimeFault& fault) {
  Json j;
  j["kind"] = runtime::fault_kind_name(fault.kind);
  j["span"] = Json::array({fault.span.begin, fault.span.end});
  j["detail"] = fault.detail;
  return j;
}

runtime::RuntimeFault fault_from_json(const Json& j) {
  runtime::RuntimeFault f;
  auto kind = runtime::parse_fault_kind(get_as<std::string>(j, "kind"));
  if (!kind) bad("unknown fault kind");
  f.kind = *kind;
  const Json& span = need(j, "span");
  if (!span.is_array() || span.size() != 2) bad("span must be [begin, end]");
  f.span = {span[0].get<std::size_t>(), span[1].get<std::size_t>()};
  f.detail = get_as<std::string>(j, "detail");
  return f;
}

Json to_json(const games::CoinState& s) {
  Json j;
  j["n"] = s.n;
  j["pos_a"] = pos_json(s.pos_a);
  j["pos_b"] = pos_json(s.pos_b);
  j["coin_red"] = pos_json(s.coin_red);
  j["coin_blue"] = pos_json(s.coin_blue);
  j["step_index"] = s.step_index;
  j["max_steps"] = s.max_steps;
  return j;
}

games::CoinState coin_state_from_json(const Json& j) {
  games::CoinState s;
  s.n = get_as<int>(j, "n");
  s.pos_a = pos_from(need(j, "pos_a"));
  s.pos_b = pos_from(need(j, "pos_b"));
  s.coin_red = pos_from(need(j, "coin_red"));
  s.coin_blue = pos_from(need(j, "coin_blue"));
  s.step_index = get_as<int>(j, "step_index");
  s.max_steps = get_as<int>(j, "max_steps");
  return s;
}

Json to_json(const MatchRecord& rec) {
  const bool coin = rec.config.game == GameKind::kCoin;
  Json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["kind"] = "match";
  j["rng_algorithm"] = rec.rng_algorithm;
  j["config"] = to_json(rec.config);
  j["source_a"] = rec.source_a;
  j["source_b"] = rec.source_b;
  if (rec.initial_state) j["initial_state"] = to_json(*rec.initial_state);
  Json rounds = Json::array();
  for (std::size_t i = 0; i < rec.rounds.size(); ++i) {
    const auto& r = rec.rounds[i];
    Json jr;
    jr["round"] = i + 1;
    jr["action_a"] = r.action_a;
    jr["action_b"] = r.action_b;
    jr["delta_a"] = r.delta_a;
    jr["delta_b"] = r.delta_b;
    jr["steps_a"] = r.steps_a;
    jr["steps_b"] = r.steps_b;
    if (coin) {
      Json ev = Json::array();
      for (const auto& e : r.events) {
        ev.push_back({{"collector", games::to_string(e.collector)},
                      {"color", games::to_string(e.color)},
                      {"cell", pos_json(e.cell)},
                      {"step", e.step}});
      }
      jr["events"] = std::move(ev);
    }
    rounds.push_back(std::move(jr));
  }
  j["rounds"] = std::move(rounds);
  j["totals"] = {{"a", rec.total_a}, {"b", rec.total_b}};
  Json faults = Json::array();
  for (const auto& f : rec.faults) {
    Json jf;
    jf["round"] = f.round;
    jf["player"] = games::to_string(f.player);
    const Json fault = to_json(f.fault);
    for (const auto& [k, v] : fault.items()) jf[k] = v;
    faults.push_back(std::move(jf));
  }
  j["faults"] = std::move(faults);
  return j;
}

MatchRecord match_record_from_json(const Json& j) {
  if (get_as<int>(j, "schema_version") != kRecordSchemaVersion) bad("unsupported schema_version");
  if (get_as<std::string>(j, "kind") != "match") bad("not a match record");
  MatchRecord rec;
  rec.rng_algorithm = get_as<std::string>(j, "rng_algorithm");
  rec.config = match_config_from_json(need(j, "config"));
  rec.source_a = get_as<std::string>(j, "source_a");
  rec.source_b = get_as<std::string>(j, "source_b");
  if (j.contains("initial_state")) rec.initial_state = coin_state_from_json(j["initial_state"]);
  for (const auto& jr : need(j, "rounds")) {
    RoundRecord r;
    r.action_a = get_as<std::string>(jr, "action_a");
    r.action_b = get_as<std::string>(jr, "action_b");
    r.delta_a = get_as<int>(jr, "delta_a");
    r.delta_b = get_as<int>(jr, "delta_b");
    r.steps_a = get_as<std::uint64_t>(jr, "steps_a");
    r.steps_b = get_as<std::uint64_t>(jr, "steps_b");
    if (jr.contains("events")) {
      for (const auto& je : jr["events"]) {
        games::CoinEvent e;
        e.collector = parse_player(need(je, "collector"));
        const auto color = get_as<std::string>(je, "color");
        if (color == "red") e.color = games::CoinColor::kRed;
        else if (color == "blue") e.color = games::CoinColor::kBlue;
        else bad("unknown coin color '" + color + "'");
        e.cell = pos_from(need(je, "cell"));
        e.step = get_as<int>(je, "step");
        r.events.push_back(e);
      }
    }
    rec.rounds.push_back(std::move(r));
  }
  const Json& totals = need(j, "totals");
  rec.total_a = get_as<int>(totals, "a");
  rec.total_b = get_as<int>(totals, "b");
  for (const auto& jf : need(j, "faults")) {
    FaultEntry f;
    f.round = get_as<int>(jf, "round");
    f.player = parse_player(need(jf, "player"));
    f.fault = fault_from_json(jf);
    rec.faults.push_back(std::move(f));
  }
  return rec;
}

Json to_json(const MetaHistoryEntry& e) {
  Json j;
  j["meta_round"] = e.meta_round;
  j["my_source"] = e.my_source;
  j["opponent_source"] = e.opponent_source;
  j["my_actions"] = e.my_actions;
  j["opponent_actions"] = e.opponent_actions;
  j["my_total"] = e.my_total;
  j["opponent_total"] = e.opponent_total;
  return j;
}

MetaHistoryEntry history_entry_from_json(const Json& j) {
  MetaHistoryEntry e;
  e.meta_round = get_as<int>(j, "meta_round");
  e.my_source = get_as<std::string>(j, "my_source");
  e.opponent_source = get_as<std::string>(j, "opponent_source");
  e.my_actions = get_as<std::vector<std::string>>(j, "my_actions");
  e.opponent_actions = get_as<std::vector<std::string>>(j, "opponent_actions");
  e.my_total = get_as<int>(j, "my_total");
  e.opponent_total = get_as<int>(j, "opponent_total");
  return e;
}

Json to_json(const JudgeLabels& labels) {
  Json j = Json::object();
  for (auto f : kAllJudgeFeatures) j[std::string(judge_feature_key(f))] = labels[f];
  return j;
}

JudgeLabels judge_labels_from_json(const Json& j) {
  check_keys(j,
             {"independent_development", "exploitation_attempt", "counter_measure",
              "direct_imitation", "feint"},
             "judge features");
  JudgeLabels labels;
  for (auto f : kAllJudgeFeatures) {
    const std::string key(judge_feature_key(f));
    if (j.contains(key)) {
      if (!j[key].is_boolean()) bad("judge feature '" + key + "' must be a boolean");
      labels[f] = j[key].get<bool>();
    }
  }
  return labels;
}

namespace {

Json provider_json(const ProviderInfo& p) {
  return {{"id", p.id}, {"tag", p.tag}, {"kind", provider_kind_name(p.kind)}};
}

ProviderInfo provider_from(const Json& j) {
  ProviderInfo p;
  p.id = get_as<std::string>(j, "id");
  p.tag = get_as<std::string>(j, "tag");
  const auto kind = get_as<std::string>(j, "kind");
  if (kind == "static") p.kind = ProviderKind::kStatic;
  else if (kind == "scripted") p.kind = ProviderKind::kScripted;
  else if (kind == "external") p.kind = ProviderKind::kExternal;
  else bad("unknown provider kind '" + kind + "'");
  return p;
}

}  // namespace

Json to_json(const MetaGameRecord& rec) {
  Json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["kind"] = "meta_game";
  j["meta_rounds"] = rec.meta_rounds;
  j["config"] = to_json(rec.config);
  j["providers"] = {{"a", provider_json(rec.provider_a)}, {"b", provider_json(rec.provider_b)}};
  Json rounds = Json::array();
  int total_a = 0;
  int total_b = 0;
  for (const auto& r : rec.rounds) {
    Json jr;
    jr["meta_round"] = r.meta_round;
    jr["source_a"] = r.source_a;
    jr["source_b"] = r.source_b;
    Json pf = Json::array();
    for (const auto& f : r.provider_faults) {
      pf.push_back({{"player", games::to_string(f.player)}, {"message", f.message}});
    }
    jr["provider_faults"] = std::move(pf);
    jr["match"] = to_json(r.match);
    if (r.judge_a || r.judge_b) {
      jr["judge"] = {{"a", r.judge_a ? to_json(*r.judge_a) : Json(nullptr)},
                     {"b", r.judge_b ? to_json(*r.judge_b) : Json(nullptr)}};
    }
    total_a += r.match.total_a;
    total_b += r.match.total_b;
    rounds.push_back(std::move(jr));
  }
  j["rounds"] = std::move(rounds);
  j["totals"] = {{"a", total_a}, {"b", total_b}};
  return j;
}

MetaGameRecord meta_record_from_json(const Json& j) {
  if (get_as<int>(j, "schema_version") != kRecordSchemaVersion) bad("unsupported schema_version");
  if (get_as<std::string>(j, "kind") != "meta_game") bad("not a meta-game record");
  MetaGameRecord rec;
  rec.meta_rounds = get_as<int>(j, "meta_rounds");
  rec.config = match_config_from_json(need(j, "config"));
  const Json& providers = need(j, "providers");
  rec.provider_a = provider_from(need(providers, "a"));
  rec.provider_b = provider_from(need(providers, "b"));
  for (const auto& jr : need(j, "rounds")) {
    MetaRound r;
    r.meta_round = get_as<int>(jr, "meta_round");
    r.source_a = get_as<std::string>(jr, "source_a");
    r.source_b = get_as<std::string>(jr, "source_b");
    for (const auto& pf : need(jr, "provider_faults")) {
      r.provider_faults.push_back({parse_player(need(pf, "player")),
                                   get_as<std::string>(pf, "message")});
    }
    r.match = match_record_from_json(need(jr, "match"));
    if (jr.contains("judge")) {
      const Json& jj = jr["judge"];
      if (jj.contains("a") && !jj["a"].is_null()) r.judge_a = judge_labels_from_json(jj["a"]);
      if (jj.contains("b") && !jj["b"].is_null()) r.judge_b = judge_labels_from_json(jj["b"]);
    }
    rec.rounds.push_back(std::move(r));
  }
  return rec;
}

Json to_json(const TournamentTable& table) {
  Json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["kind"] = "tournament";
  j["tags"] = table.tags;
  j["mean"] = table.mean;
  Json samples = Json::array();
  for (std::size_t i = 0; i < table.samples.size(); ++i) {
    for (std::size_t k = 0; k < table.samples[i].size(); ++k) {
      for (const auto& s : table.samples[i][k]) {
        samples.push_back({{"row", table.tags[i]},
                           {"column", table.tags[k]},
                           {"seed", s.seed},
                           {"payoff", s.payoff},
                           {"opponent_payoff", s.opponent_payoff}});
      }
    }
  }
  j["samples"] = std::move(samples);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace osg::arena
