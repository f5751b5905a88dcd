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

#include <string>
#include <string_view>
#include <vector>

#include "simdetect/textprep.h"
#include "textprep/utf8.h"

namespace simdetect {
namespace {

enum class CharClass { kKeep, kSeparator, kDrop };

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

CharClass classify(char32_t cp) {
  // Apostrophes join contractions: "don't" -> "dont".
  if (cp == U'\'' || cp == 0x2019 || cp == 0x02BC) return CharClass::kDrop;
  if (cp < 0x80) {
    if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
        (cp >= U'0' && cp <= U'9')) {
      return CharClass::kKeep;
    }
    // Whitespace, control characters and ASCII punctuation/symbols.
    return CharClass::kSeparator;
  }
  if (in(cp, 0x80, 0xBF) || cp == 0xD7 || cp == 0xF7) return CharClass::kSeparator;
  if (cp == 0x1680 || in(cp, 0x2000, 0x206F)) return CharClass::kSeparator;
  if (in(cp, 0x2E00, 0x2E7F)) return CharClass::kSeparator;
  if (in(cp, 0x3000, 0x3003) || in(cp, 0x3008, 0x3011)) return CharClass::kSeparator;
  if (in(cp, 0xFF01, 0xFF0F) || in(cp, 0xFF1A, 0xFF20)) return CharClass::kSeparator;
  if (cp == 0xFEFF || cp == utf8::kReplacement) return CharClass::kSeparator;
  return CharClass::kKeep;
}

// Simple case folding for ASCII, Latin-1, Latin Extended-A, Greek and
// Cyrillic. Other code points are returned unchanged.
char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp < 0x80) return cp;
  if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 0x20;
  if (in(cp, 0x100, 0x137) || in(cp, 0x14A, 0x177)) return cp | 1;
  if (in(cp, 0x139, 0x148) || in(cp, 0x179, 0x17E)) {
    return (cp & 1) ? cp + 1 : cp;
  }
  if (cp == 0x178) return 0xFF;
  if (in(cp, 0x391, 0x3A9) && cp != 0x3A2) return cp + 0x20;
  if (in(cp, 0x410, 0x42F)) return cp + 0x20;
  if (in(cp, 0x400, 0x40F)) return cp + 0x50;
  return cp;
}

}  // namespace

std::string normalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char32_t cp : utf8::decode(text)) {
    switch (classify(cp)) {
      case CharClass::kDrop:
        break;
      case CharClass::kSeparator:
        pending_space = !out.empty();
        break;
      case CharClass::kKeep:
        if (pending_space) out.push_back(' ');
        pending_space = false;
        utf8::append(out, to_lower(cp));
        break;
    }
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view sentence_text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  };
  while (i < sentence_text.size()) {
    while (i < sentence_text.size() && is_space(sentence_text[i])) ++i;
    const std::size_t start = i;
    while (i < sentence_text.size() && !is_space(sentence_text[i])) ++i;
    if (i > start) tokens.emplace_back(sentence_text.substr(start, i - start));
  }
  return tokens;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordList& stopwords) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stopwords.contains(t)) out.push_back(t);
  }
  return out;
}

}  // namespace simdetect
