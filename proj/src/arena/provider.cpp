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

#include "osgame/arena/provider.hpp"

#include "osgame/arena/records.hpp"
#include "osgame/arena/subprocess.hpp"

namespace osg::arena {

std::string_view provider_kind_name(ProviderKind kind) {
  switch (kind) {
    case ProviderKind::kStatic: return "static";
    case ProviderKind::kScripted: return "scripted";
    case ProviderKind::kExternal: return "external";
  }
  return "static";
}

StaticProvider::StaticProvider(std::string id, std::string tag, std::string source)
    : Provider(std::move(id), std::move(tag)), source_(std::move(source)) {}

Proposal StaticProvider::propose(const ProposalRequest&) {
  Proposal p;
  p.source = source_;
  return p;
}

ScriptedProvider::ScriptedProvider(std::string id, std::string tag,
                                   std::vector<std::string> sources)
    : Provider(std::move(id), std::move(tag)), sources_(std::move(sources)) {}

Proposal ScriptedProvider::propose(const ProposalRequest& request) {
  Proposal p;
  if (sources_.empty()) {
    p.error = "scripted provider has no sources";
    return p;
  }
  const auto k = static_cast<std::size_t>(std::max(request.meta_round, 1)) - 1;
  p.source = sources_[std::min(k, sources_.size() - 1)];
  return p;
}

ExternalProvider::ExternalProvider(std::string id, std::string tag,
                                   std::vector<std::string> argv,
                                   std::chrono::milliseconds timeout)
    : Provider(std::move(id), std::move(tag)), argv_(std::move(argv)), timeout_(timeout) {}

ExternalProvider::~ExternalProvider() = default;

void ExternalProvider::start(games::GameKind game) {
  try {
    child_ = std::make_unique<ChildProcess>(argv_);
  } catch (const std::exception& e) {
    throw ProtocolError(e.what(), transcript_);
  }
  Json hello;
  hello["type"] = "hello";
  hello["protocol"] = kProtocolVersion;
  hello["game"] = games::game_name(game);
  const std::string line = hello.dump();
  transcript_.push_back("> " + line);
  if (!child_->write_line(line)) throw ProtocolError("agent closed its input", transcript_);
  auto reply = child_->read_line(timeout_);
  if (!reply) {
    child_->terminate();
    throw ProtocolError("no handshake reply within timeout", transcript_);
  }
  transcript_.push_back("< " + *reply);
  Json j = Json::parse(*reply, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("type") || j["type"] != "ready") {
    child_->terminate();
    throw ProtocolError("expected {\"type\":\"ready\"}", transcript_);
  }
}

Proposal ExternalProvider::propose(const ProposalRequest& request) {
  Proposal out;
  if (!child_ || !child_->alive()) {
    out.error = "agent is not running";
    return out;
  }
  Json msg;
  msg["type"] = "propose";
  msg["meta_round"] = request.meta_round;
  Json history = Json::array();
  for (const auto& e : request.history) history.push_back(to_json(e));
  msg["history"] = std::move(history);
  msg["opponent_previous_source"] = request.opponent_previous_source
                                        ? Json(*request.opponent_previous_source)
                                        : Json(nullptr);
  const std::string line = msg.dump();
  transcript_.push_back("> " + line);
  if (!child_->write_line(line)) {
    out.error = "agent closed its input";
    return out;
  }
  auto reply = child_->read_line(timeout_);
  if (!reply) {
    child_->terminate();
    out.error = "no reply within timeout";
    return out;
  }
  transcript_.push_back("< " + *reply);
  Json j = Json::parse(*reply, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    out.error = "reply is not a JSON object";
    return out;
  }
  if (!j.contains("type") || j["type"] != "program") {
    out.error = "expected a message of type \"program\"";
    return out;
  }
  if (!j.contains("source") || !j["source"].is_string()) {
    out.error = "program message lacks a string \"source\"";
    return out;
  }
  out.source = j["source"].get<std::string>();
  if (j.contains("rationale") && j["rationale"].is_string()) {
    out.rationale = j["rationale"].get<std::string>();
  }
  return out;
}

}  // namespace osg::arena
