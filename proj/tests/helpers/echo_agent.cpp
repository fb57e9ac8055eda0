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

// Loopback agent for the provider protocol tests.
//
//   echo_agent FILE          answers every proposal with FILE's contents
//   echo_agent --silent      completes the handshake, then never answers
//   echo_agent --no-ready    answers the handshake with the wrong type
//   echo_agent --garbage F   answers round 1 with F, later rounds with junk
//   echo_agent --judge       a judge that flags direct imitation when the
//                            submission equals the opponent's previous source

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <json.hpp>

using nlohmann::json;

int main(int argc, char** argv) {
  std::string mode = argc > 1 ? argv[1] : "";
  std::string source;
  const std::string file = mode == "--garbage" && argc > 2 ? argv[2] : mode;
  if (mode.rfind("--", 0) != 0 || mode == "--garbage") {
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    source = ss.str();
  }
  std::string line;
  int proposals = 0;
  while (std::getline(std::cin, line)) {
    const json msg = json::parse(line, nullptr, false);
    if (msg.is_discarded()) return 3;
    const std::string type = msg.value("type", "");
    json reply;
    if (type == "hello") {
      reply["type"] = mode == "--no-ready" ? "hi" : "ready";
    } else if (type == "propose") {
      ++proposals;
      if (mode == "--silent") {
        std::this_thread::sleep_for(std::chrono::seconds(30));
        continue;
      }
      if (mode == "--garbage" && proposals > 1) {
        std::cout << "this is not json" << std::endl;
        continue;
      }
      reply["type"] = "program";
      reply["source"] = source;
      reply["rationale"] = "echo";
    } else if (type == "judge") {
      reply["type"] = "labels";
      const bool copy = msg.value("source", "") == msg.value("opponent_previous_source", "");
      reply["features"] = {{"independent_development", !copy}, {"direct_imitation", copy}};
    } else {
      return 4;
    }
    std::cout << reply.dump() << std::endl;
  }
  return 0;
}
