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

#include <algorithm>
#include <cmath>
#include <filesystem>

#include <json.hpp>

#include "osgame/analysis/metrics.hpp"
#include "osgame/analysis/transforms.hpp"
#include "osgame/slang/parser.hpp"
#include "osgame/slang/renderer.hpp"
#include "test_support.hpp"

using namespace osg;
using namespace osg::analysis;

namespace {

slang::SyntaxTree tree_of(const std::string& text) { return slang::parse_source({text, "t"}); }

std::vector<slang::StrategyProgram> corpus() {
  std::vector<slang::StrategyProgram> out;
  for (const auto& e : std::filesystem::directory_iterator(testing::fixture("corpus"))) {
    out.push_back(slang::load_program_file(e.path(), games::GameKind::kIpd));
  }
  return out;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("AllC by hand: 2 operators, 2 operands, volume 8, effort 8") {
  const auto h = halstead(tree_of("fn strategy() { return \"C\" }"));
  CHECK(h.eta1 == 2);
  CHECK(h.eta2 == 2);
  CHECK(h.n1 == 2);
  CHECK(h.n2 == 2);
  CHECK(h.volume == doctest::Approx(8.0));
  CHECK(h.difficulty == doctest::Approx(1.0));
  CHECK(h.effort == doctest::Approx(8.0));
  CHECK(h.operators.at("fn") == 1);
  CHECK(h.operands.at("\"C\"") == 1);
}

TEST_CASE("TFT by hand") {
  // operators: fn if == return x2 [] -(unary); operands: strategy round_index 0 "C"
  // opp_history 1
  const auto h = halstead(tree_of(
      "fn strategy() { if round_index == 0 { return \"C\" } return opp_history[-1] }"));
  CHECK(h.eta1 == 6);
  CHECK(h.n1 == 7);
  CHECK(h.eta2 == 6);
  CHECK(h.n2 == 6);
  CHECK(h.volume == doctest::Approx(13.0 * std::log2(12.0)));
  CHECK(h.difficulty == doctest::Approx(3.0));
  CHECK(h.effort == doctest::Approx(3.0 * 13.0 * std::log2(12.0)));
}

TEST_CASE("calls, assignment and delimiters") {
  const auto h = halstead(tree_of("fn strategy() { let x = [1, 2] x = (len(x), 3) return \"C\" }"));
  CHECK(h.operators.at("=") == 2);
  CHECK(h.operators.at("()") == 1);
  CHECK(h.operators.count(",") == 0);
  CHECK(h.operands.at("x") == 3);
  CHECK(h.operands.at("len") == 1);
}

TEST_CASE("cyclomatic complexity") {
  CHECK(cyclomatic(tree_of("fn strategy() { return \"C\" }")) == 1);
  CHECK(cyclomatic(tree_of("fn strategy() { if true { return \"C\" } return \"D\" }")) == 2);
  CHECK(cyclomatic(tree_of(
            "fn strategy() { if true and false { return \"C\" } elif true or false { return "
            "\"D\" } else { return \"C\" } }")) == 5);
  CHECK(cyclomatic(tree_of("fn strategy() { for i in range(2) { } while false { } return \"C\" }")) ==
        3);
  CHECK(cyclomatic(testing::corpus_program("grim_after_trigger").tree) == 3);
  CHECK(cyclomatic(testing::corpus_program("tf2t").tree) == 4);
}

TEST_CASE("OSAS hand traces") {
  auto o = osas(tree_of("fn strategy() { return \"C\" }"));
  CHECK(o.tainted_sites == 0);
  CHECK(o.total_sites == 1);
  CHECK(o.score == 0.0);

  // condition tainted, return inside tainted, final return clean
  o = osas(testing::corpus_program("similarity_comparator").tree);
  CHECK(o.tainted_sites == 2);
  CHECK(o.total_sites == 3);
  CHECK(o.score == doctest::Approx(2.0 / 3.0));

  // taint through a helper's parameter and return value
  o = osas(tree_of("fn check(s) { return contains(s, \"x\") }\n"
                   "fn strategy() { let t = check(opp_source) if t { return \"D\" } return \"C\" }"));
  CHECK(o.tainted_sites == 3);
  CHECK(o.total_sites == 4);

  // implicit flow from an outer tainted guard into a later use
  o = osas(tree_of("fn strategy() { let m = \"C\" if len(opp_source) > 10 { m = \"D\" } "
                   "if m == \"D\" { return m } return \"C\" }"));
  CHECK(o.tainted_sites == 3);
  CHECK(o.total_sites == 4);

  // loop over the opponent's source taints the loop variable
  o = osas(tree_of("fn strategy() { for ch in [opp_source] { if ch == \"\" { return \"D\" } } "
                   "return \"C\" }"));
  CHECK(o.tainted_sites == 3);
  CHECK(o.total_sites == 4);
}

TEST_CASE("OSAS soundness and monotonicity over the corpus") {
  for (const auto& p : corpus()) {
    const auto ids = identifiers_in(p.tree);
    const bool reads = std::find(ids.begin(), ids.end(), "opp_source") != ids.end();
    const auto base = osas(p.tree);
    if (!reads) CHECK(base.tainted_sites == 0);
    CHECK(base.score >= 0.0);
    CHECK(base.score <= 1.0);

    auto extended = p.tree;
    auto guard = tree_of("fn strategy() { if contains(opp_source, \"D\") { return \"C\" } "
                         "return \"C\" }");
    for (auto& fn : extended.functions) {
      if (fn.name == "strategy") {
        fn.body.insert(fn.body.begin(), guard.functions[0].body[0]);
      }
    }
    CHECK(osas(extended).tainted_sites >= base.tainted_sites);
  }
}

TEST_CASE("obfuscation keeps every metric count") {
  Rng rng(3);
  for (const auto& p : corpus()) {
    const auto before = compute_metrics(p.tree);
    const auto renamed = slang::parse_source({slang::render(obfuscate(p.tree, rng).first), "o"});
    const auto after = compute_metrics(renamed);
    CHECK(after.cyclomatic == before.cyclomatic);
    CHECK(after.halstead.eta1 == before.halstead.eta1);
    CHECK(after.halstead.eta2 == before.halstead.eta2);
    CHECK(after.halstead.n1 == before.halstead.n1);
    CHECK(after.halstead.n2 == before.halstead.n2);
    CHECK(after.halstead.effort == doctest::Approx(before.halstead.effort));
    CHECK(after.osas.tainted_sites == before.osas.tainted_sites);
    CHECK(after.osas.total_sites == before.osas.total_sites);
  }
}

TEST_CASE("serialized forms") {
  const auto report = compute_metrics(tree_of("fn strategy() { return \"C\" }"));
  const auto j = nlohmann::json::parse(metrics_to_json(report));
  CHECK(j["schema_version"] == kMetricsSchemaVersion);
  CHECK(j["cyclomatic"] == 1);
  CHECK(j["halstead_effort"].get<double>() == doctest::Approx(8.0));
  CHECK(j["osas"].get<double>() == 0.0);
  const std::string header = metrics_csv_header();
  const std::string row = metrics_to_csv_row(report);
  CHECK(std::count(header.begin(), header.end(), ',') == std::count(row.begin(), row.end(), ','));
  CHECK(row.find('\n') == std::string::npos);
}

}  // TEST_SUITE
