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

#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "osgame/games/game_kind.hpp"

namespace osg::arena {

class ChildProcess;

// One prior meta-round as seen by the provider being asked.
struct MetaHistoryEntry {
  int meta_round = 0;
  std::string my_source;
  std::string opponent_source;
  std::vector<std::string> my_actions;
  std::vector<std::string> opponent_actions;
  int my_total = 0;
  int opponent_total = 0;

  bool operator==(const MetaHistoryEntry&) const = default;
};

struct ProposalRequest {
  int meta_round = 1;  // 1-based
  games::GameKind game = games::GameKind::kIpd;
  std::vector<MetaHistoryEntry> history;
  // The opponent's source from meta-round k-1; absent at k = 1.
  std::optional<std::string> opponent_previous_source;
};

struct Proposal {
  std::optional<std::string> source;
  std::string error;  // set when source is absent
  std::optional<std::string> rationale;  // accepted on the wire, not used
};

enum class ProviderKind { kStatic, kScripted, kExternal };

std::string_view provider_kind_name(ProviderKind kind);

// Raised when an external agent fails the handshake. Carries the messages
// exchanged so far.
class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(const std::string& what, std::vector<std::string> transcript)
      : std::runtime_error(what), transcript_(std::move(transcript)) {}
  const std::vector<std::string>& transcript() const { return transcript_; }

 private:
  std::vector<std::string> transcript_;
};

// Source of strategy programs for the repeated game.
class Provider {
 public:
  Provider(std::string id, std::string tag) : id_(std::move(id)), tag_(std::move(tag)) {}
  virtual ~Provider() = default;

  const std::string& id() const { return id_; }
  // Free-form label such as "CPM", "DPM" or "PM".
  const std::string& tag() const { return tag_; }
  virtual ProviderKind kind() const = 0;

  // Called once before the first proposal.
  virtual void start(games::GameKind /*game*/) {}
  virtual Proposal propose(const ProposalRequest& request) = 0;

 private:
  std::string id_;
  std::string tag_;
};

// Always submits the same source.
class StaticProvider : public Provider {
 public:
  StaticProvider(std::string id, std::string tag, std::string source);
  ProviderKind kind() const override { return ProviderKind::kStatic; }
  Proposal propose(const ProposalRequest& request) override;

 private:
  std::string source_;
};

// Submits sources[k-1] at meta-round k; the last entry repeats.
class ScriptedProvider : public Provider {
 public:
  ScriptedProvider(std::string id, std::string tag, std::vector<std::string> sources);
  ProviderKind kind() const override { return ProviderKind::kScripted; }
  Proposal propose(const ProposalRequest& request) override;

 private:
  std::vector<std::string> sources_;
};

inline constexpr int kProtocolVersion = 1;

// A child process speaking newline-delimited JSON on its stdin/stdout:
//   -> {"type":"hello","protocol":1,"game":"ipd"}      <- {"type":"ready"}
//   -> {"type":"propose","meta_round":k,"history":[...],
//       "opponent_previous_source":"..."|null}         <- {"type":"program","source":"..."}
// A reply that is late, malformed or of the wrong type fails that proposal.
// After a timeout the child is stopped and later proposals fail too.
class ExternalProvider : public Provider {
 public:
  ExternalProvider(std::string id, std::string tag, std::vector<std::string> argv,
                   std::chrono::milliseconds timeout = std::chrono::seconds(60));
  ~ExternalProvider() override;

  ProviderKind kind() const override { return ProviderKind::kExternal; }
  // Spawns the child and performs the handshake. Throws ProtocolError.
  void start(games::GameKind game) override;
  Proposal propose(const ProposalRequest& request) override;

  const std::vector<std::string>& transcript() const { return transcript_; }

 private:
  std::vector<std::string> argv_;
  std::chrono::milliseconds timeout_;
  std::unique_ptr<ChildProcess> child_;
  std::vector<std::string> transcript_;
};

}  // namespace osg::arena
