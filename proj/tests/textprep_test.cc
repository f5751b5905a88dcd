// Copyright 2026 The simdetect Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "simdetect/error.h"
#include "simdetect/textprep.h"
#include "test_util.h"

namespace simdetect {
namespace {

TEST_CASE("normalize examples") {
  CHECK(normalize("English Word") == "english word");
  CHECK(normalize("") == "");
  CHECK(normalize("  Web   Based\xE2\x80\x94" "Cross!  ") == "web based cross");
  CHECK(normalize("Player kicked the ball.") == "player kicked the ball");
}

TEST_CASE("normalize keeps digits and joins apostrophes") {
  CHECK(normalize("Route 66, opened in 1926.") == "route 66 opened in 1926");
  CHECK(normalize("Don't stop") == "dont stop");
  CHECK(normalize("don\xE2\x80\x99t") == "dont");
}

TEST_CASE("normalize lowercases and keeps non-ASCII letters") {
  CHECK(normalize("\xC3\x89" "COLE Stra\xC3\x9F" "e") == "\xC3\xA9" "cole stra\xC3\x9F" "e");
  CHECK(normalize("\xCE\x9A\xCE\xB1\xCE\xBB\xCE\xB7") == "\xCE\xBA\xCE\xB1\xCE\xBB\xCE\xB7");
  CHECK(normalize("a\xC2\xA0" "b") == "a b");  // no-break space
}

TEST_CASE("normalize output alphabet and idempotence over random text") {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::string t = testing::random_text(rng, 40);
    const std::string n = normalize(t);
    CHECK(normalize(n) == n);
    REQUIRE(is_valid_utf8(n));
    CHECK((n.empty() || (n.front() != ' ' && n.back() != ' ')));
    CHECK(n.find("  ") == std::string::npos);
    for (unsigned char c : n) {
      if (c < 0x80) {
        CHECK(((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == ' '));
      }
    }
  }
}

TEST_CASE("tokenize") {
  CHECK(tokenize("web based cross") == std::vector<std::string>{"web", "based", "cross"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("player kicked the ball").size() == 4);
  CHECK(tokenize("  a \t b  ") == std::vector<std::string>{"a", "b"});
}

TEST_CASE("split_sentences examples") {
  auto two = split_sentences("Player kicked the ball. Player kick the ball.");
  REQUIRE(two.size() == 2);
  CHECK(two[0].text == "Player kicked the ball.");
  CHECK(two[1].text == "Player kick the ball.");
  CHECK(two[0].index == 0);
  CHECK(two[1].index == 1);

  CHECK(split_sentences("").empty());

  auto one = split_sentences("soccer game is fantastic");
  REQUIRE(one.size() == 1);
  CHECK(one[0].text == "soccer game is fantastic");
  CHECK(one[0].tokens == std::vector<std::string>{"soccer", "game", "is", "fantastic"});
}

TEST_CASE("split_sentences terminators") {
  auto s = split_sentences("Really? Yes! It is 3.14 today... Fine.");
  REQUIRE(s.size() == 4);
  CHECK(s[0].text == "Really?");
  CHECK(s[1].text == "Yes!");
  CHECK(s[2].text == "It is 3.14 today...");
  CHECK(s[3].text == "Fine.");
  // Punctuation-only pieces carry no tokens and are dropped.
  auto p = split_sentences("Hello. ... !! World.");
  REQUIRE(p.size() == 2);
  CHECK(p[1].text == "World.");
  CHECK(p[1].index == 1);
}

TEST_CASE("sentence content tokens are stemmed non-stopwords") {
  auto s = split_sentences("The players kicked the balls.");
  REQUIRE(s.size() == 1);
  CHECK(s[0].tokens == std::vector<std::string>{"the", "players", "kicked", "the", "balls"});
  CHECK(s[0].content_tokens == std::vector<std::string>{"player", "kick", "ball"});
}

TEST_CASE("split_sentences covers input in order (random)") {
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const std::string t = testing::random_text(rng, 60);
    const auto sentences = split_sentences(t);
    std::string joined;
    for (std::size_t j = 0; j < sentences.size(); ++j) {
      CHECK(sentences[j].index == j);
      CHECK(!sentences[j].tokens.empty());
      joined += sentences[j].text;
    }
    CHECK(testing::is_subsequence(joined, t));
  }
}

TEST_CASE("remove_stopwords") {
  const auto& sw = StopwordList::english();
  CHECK(remove_stopwords({"the", "ball"}, sw) == std::vector<std::string>{"ball"});
  CHECK(remove_stopwords({}, sw).empty());
  CHECK(remove_stopwords({"soccer", "game"}, sw) ==
        std::vector<std::string>{"soccer", "game"});
}

TEST_CASE("remove_stopwords output is a subsequence (random)") {
  std::mt19937 rng(3);
  const std::vector<std::string> pool = {"the", "ball", "a", "kick", "of", "goal", "and"};
  const auto& sw = StopwordList::english();
  for (int i = 0; i < 500; ++i) {
    std::vector<std::string> in(rng() % 12);
    for (auto& t : in) t = pool[rng() % pool.size()];
    const auto out = remove_stopwords(in, sw);
    CHECK(out.size() <= in.size());
    CHECK(testing::is_subsequence(out, in));
    for (const auto& t : out) CHECK(!sw.contains(t));
  }
}

TEST_CASE("stopword list file format") {
  const auto list = StopwordList::parse("# comment\nThe\n\n  and  \r\n#the end\nOF\n");
  CHECK(list.size() == 3);
  CHECK(list.contains("the"));
  CHECK(list.contains("and"));
  CHECK(list.contains("of"));
  CHECK_FALSE(list.contains("end"));
}

TEST_CASE("built-in stopword list matches the shipped file") {
  const auto file = StopwordList::from_file(testing::repo_path("data/stopwords.txt"));
  CHECK(file.words() == StopwordList::english().words());
  CHECK(file.digest() == StopwordList::english().digest());
  CHECK(file.size() >= 100);
  CHECK(file.size() <= 140);
}

TEST_CASE("stopword list from a missing file") {
  CHECK_THROWS_AS(StopwordList::from_file("/nonexistent/stopwords.txt"), IoError);
}

TEST_CASE("make_document") {
  const Document d = make_document("d1", "Player kicked the ball. The ball flew!");
  CHECK(d.id == "d1");
  CHECK(d.sentences.size() == 2);
  CHECK(d.normalized_text == "player kicked the ball the ball flew");
  CHECK_FALSE(d.empty());
  CHECK(make_document("e", "").empty());
}

TEST_CASE("is_valid_utf8") {
  CHECK(is_valid_utf8(""));
  CHECK(is_valid_utf8("plain ascii"));
  CHECK(is_valid_utf8("\xE2\x80\x94"));
  CHECK_FALSE(is_valid_utf8("\xFF"));
  CHECK_FALSE(is_valid_utf8("\xE2\x80"));        // truncated
  CHECK_FALSE(is_valid_utf8("\xC0\xAF"));        // overlong
  CHECK_FALSE(is_valid_utf8("\xED\xA0\x80"));    // surrogate
}

}  // namespace
}  // namespace simdetect
