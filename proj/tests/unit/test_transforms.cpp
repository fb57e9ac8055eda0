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
#include <filesystem>
#include <set>

#include "osgame/analysis/transforms.hpp"
#include "osgame/oracle/labeler.hpp"
#include "osgame/slang/builtins.hpp"
#include "osgame/slang/parser.hpp"
#include "osgame/slang/renderer.hpp"
#include "osgame/slang/token.hpp"
#include "test_support.hpp"

using namespace osg;
using namespace osg::analysis;

namespace {

std::vector<std::pair<slang::TokenKind, std::string>> code_tokens(const std::string& text) {
  std::vector<std::pair<slang::TokenKind, std::string>> out;
  for (const auto& t : slang::tokenize({text, "t"})) {
    if (t.kind != slang::TokenKind::kComment) out.emplace_back(t.kind, t.lexeme);
  }
  return out;
}

std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(testing::fixture("corpus"))) {
    out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_il_name(const std::string& s) {
  return s.size() >= 12 && s.size() <= 20 &&
         std::all_of(s.begin(), s.end(), [](char c) { return c == 'I' || c == 'l'; });
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("strip removes comments and nothing else") {
  for (const auto& path : corpus_files()) {
    const slang::SourceText src{slang::read_text_file(path), path.string()};
    const auto stripped = strip_comments(src);
    for (const auto& t : slang::tokenize(stripped)) CHECK(t.kind != slang::TokenKind::kComment);
    CHECK(code_tokens(stripped.text) == code_tokens(src.text));
    CHECK(strip_comments(stripped).text == stripped.text);
  }
}

TEST_CASE("strip keeps '#' inside string literals") {
  const std::string text = "fn strategy() {\n  # note\n  let s = \"#x\"  # trailing\n  return \"C\"\n}\n";
  const auto out = strip_comments({text, "t"}).text;
  CHECK(out == "fn strategy() {\n  let s = \"#x\"\n  return \"C\"\n}\n");
}

TEST_CASE("mask renames helpers only, in definition order") {
  const auto p = testing::corpus_program("majority");
  const auto [masked, map] = mask(p.tree);
  REQUIRE(map.entries().size() == 1);
  CHECK(map.entries()[0].first == "tally");
  CHECK(map.entries()[0].second == "fn_1");
  CHECK(masked.find("fn_1") != nullptr);
  CHECK(masked.find("strategy") != nullptr);
  const auto ids = identifiers_in(masked);
  CHECK(std::find(ids.begin(), ids.end(), "moves") != ids.end());
  CHECK(std::find(ids.begin(), ids.end(), "tally") == ids.end());

  const auto two = slang::parse_source(
      {"fn b() { return 1 }\nfn a() { return b() }\nfn strategy() { let x = a() return \"C\" }", "t"});
  const auto [m2, map2] = mask(two);
  CHECK(map2.lookup("b") == "fn_1");
  CHECK(map2.lookup("a") == "fn_2");
  CHECK(map2.lookup("x") == std::nullopt);

  const auto plain = mask(testing::corpus_program("tft").tree);
  CHECK(plain.second.empty());
  CHECK(slang::structurally_equal(plain.first, testing::corpus_program("tft").tree));
}

TEST_CASE("obfuscate renames every user identifier over {I,l}") {
  Rng rng(11);
  const auto p = testing::corpus_program("majority");
  const auto [obf, map] = obfuscate(p.tree, rng);
  CHECK(map.injective());
  std::set<std::string> originals;
  for (const auto& [from, to] : map.entries()) {
    originals.insert(from);
    CHECK(is_il_name(to));
  }
  CHECK(originals == std::set<std::string>{"tally", "moves", "wanted", "n", "m"});
  for (const auto& id : identifiers_in(obf)) {
    const bool kept = id == "strategy" || slang::is_reserved_name(id);
    CHECK((kept || is_il_name(id)));
  }
}

TEST_CASE("obfuscated names never collide across the corpus") {
  Rng rng(5);
  for (const auto& path : corpus_files()) {
    const auto p = slang::load_program_file(path, games::GameKind::kIpd);
    const auto [obf, map] = obfuscate(p.tree, rng);
    CHECK(map.injective());
    // applying the map again to the original gives the same tree
    CHECK(slang::structurally_equal(apply_renames(p.tree, map), obf));
    // rendered text reloads as a valid program
    CHECK_NOTHROW(slang::load_program({slang::render(obf), "o"}, games::GameKind::kIpd));
  }
}

TEST_CASE("obfuscation depends only on the seed") {
  const auto p = testing::corpus_program("majority");
  Rng r1(99);
  Rng r2(99);
  Rng r3(100);
  const auto a = obfuscate(p.tree, r1).second.entries();
  const auto b = obfuscate(p.tree, r2).second.entries();
  const auto c = obfuscate(p.tree, r3).second.entries();
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("transforms preserve behaviour on the corpus") {
  Rng rng(21);
  for (const auto& path : corpus_files()) {
    const auto p = slang::load_program_file(path, games::GameKind::kIpd);
    const auto base = oracle::label_cooperative(p, 10, 7);
    for (const auto& tree : {mask(p.tree).first, obfuscate(p.tree, rng).first}) {
      const auto q = slang::load_program({slang::render(tree), "v"}, games::GameKind::kIpd);
      CHECK(oracle::label_cooperative(q, 10, 7).trace == base.trace);
    }
  }
}

}  // TEST_SUITE
