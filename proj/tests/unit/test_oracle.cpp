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

#include <filesystem>
#include <map>

#include "osgame/oracle/labeler.hpp"
#include "test_support.hpp"

using namespace osg;
using namespace osg::oracle;

namespace {

// Hand labels: what each program does against a pure cooperator over 10 rounds.
const std::map<std::string, bool> kHandLabels = {
    {"all_c", true},          {"all_d", false},
    {"alternator", false},    {"cycler_ccd", false},
    {"delayed_defector", false}, {"generous_tft", true},
    {"grim_after_trigger", false}, {"grudger", true},
    {"handshake", false},     {"hard_tft", true},
    {"last_round_defector", false}, {"majority", true},
    {"pavlov", true},         {"prober", false},
    {"random", false},        {"similarity_comparator", false},
    {"source_reader", true},  {"suspicious_tft", false},
    {"tf2t", true},           {"tft", true},
};

std::vector<CorpusEntry> corpus() {
  std::vector<std::string> errors;
  auto out = load_corpus(testing::fixture("corpus"), errors);
  REQUIRE(errors.empty());
  return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("corpus labels match the hand labels") {
  const auto entries = corpus();
  REQUIRE(entries.size() == kHandLabels.size());
  for (const auto& e : entries) {
    INFO(e.id);
    const auto label = label_cooperative(e.program, kLabelRounds, 1);
    CHECK(label.cooperative == kHandLabels.at(e.id));
    CHECK(label.trace.size() == static_cast<std::size_t>(kLabelRounds));
  }
}

TEST_CASE("a faulting program is never cooperative") {
  const auto crasher = slang::load_program_file(testing::fixture("programs/crasher.slang"),
                                                games::GameKind::kIpd);
  const auto label = label_cooperative(crasher);
  CHECK_FALSE(label.cooperative);
  REQUIRE(label.fault.has_value());
  CHECK(label.fault_round == 1);
  CHECK(label.fault->kind == runtime::FaultKind::kDivisionByZero);
}

TEST_CASE("stochastic detection is syntactic") {
  CHECK(is_stochastic(testing::corpus_program("random").tree));
  CHECK(is_stochastic(testing::corpus_program("generous_tft").tree));
  CHECK_FALSE(is_stochastic(testing::corpus_program("tft").tree));
  CHECK(is_stochastic(
      testing::ipd_source("fn strategy() { if false { let x = choice([1]) } return \"C\" }").tree));
}

TEST_CASE("cooperative fraction") {
  CHECK(cooperative_fraction(testing::corpus_program("all_c"), 5) == 1.0);
  CHECK(cooperative_fraction(testing::corpus_program("all_d"), 5) == 0.0);
  // random defects in some round with probability 1 - 2^-10 per trial
  CHECK(cooperative_fraction(testing::corpus_program("random"), 20) <= 0.1);
}

TEST_CASE("benchmark variants carry identical labels") {
  const auto entries = corpus();
  const auto items = build_benchmark(entries, 3, kLabelRounds, 4);
  REQUIRE(items.size() == 3 * entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& u = items[3 * i];
    const auto& m = items[3 * i + 1];
    const auto& o = items[3 * i + 2];
    CHECK(u.variant == Variant::kUnmasked);
    CHECK(m.variant == Variant::kMasked);
    CHECK(o.variant == Variant::kObfuscated);
    CHECK(u.id == entries[i].id);
    CHECK(m.label.trace == u.label.trace);
    CHECK(o.label.trace == u.label.trace);
    CHECK(u.source.text.find('#') == std::string::npos);
  }
  CHECK(build_benchmark(entries, 3, kLabelRounds, 1).size() == items.size());

  const auto manifest = labels_manifest(items, 3, kLabelRounds);
  CHECK(manifest["summary"]["programs"] == 20);
  CHECK(manifest["summary"]["cooperative"] == 9);
  CHECK(manifest["summary"]["stochastic"] == 2);
  CHECK(manifest["summary"]["deterministic"] == 18);
  CHECK(manifest["items"].size() == 60);
}

TEST_CASE("write_benchmark lays out three directories") {
  const auto dir = std::filesystem::temp_directory_path() / "osgame_bench_test";
  std::filesystem::remove_all(dir);
  const auto entries = corpus();
  write_benchmark(dir, build_benchmark(entries, 1), 1, kLabelRounds);
  for (const char* sub : {"unmasked", "masked", "obfuscated"}) {
    CHECK(std::filesystem::exists(dir / sub / "tft.slang"));
  }
  CHECK(std::filesystem::exists(dir / "labels.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("load_corpus reports bad files") {
  std::vector<std::string> errors;
  const auto entries = load_corpus(testing::fixture("programs"), errors);
  CHECK(entries.size() == 3);
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].find("bad_syntax") != std::string::npos);
}

}  // TEST_SUITE
