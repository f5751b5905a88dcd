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
#include <cctype>
#include <fstream>
#include <sstream>

#include "defaults.h"
#include "simdetect/error.h"
#include "simdetect/features.h"

namespace simdetect {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool is_word_char(char c) {
  // Any non-ASCII byte is treated as part of a word.
  return std::isalnum(static_cast<unsigned char>(c)) ||
         static_cast<unsigned char>(c) >= 0x80;
}

// ASCII-lowercases and collapses whitespace runs to one space, trimmed.
std::string fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (char c : s) {
    if (is_space(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

std::string clean_phrase(std::string_view line) {
  std::string p = fold(line);
  for (;;) {
    if (p.ends_with("\xE2\x80\xA6")) {  // U+2026 HORIZONTAL ELLIPSIS
      p.resize(p.size() - 3);
    } else if (!p.empty() && (p.back() == '.' || p.back() == ',' ||
                              p.back() == ':' || p.back() == ' ')) {
      p.pop_back();
    } else {
      break;
    }
  }
  return p;
}

// Position of the first occurrence of `phrase` in `text` on word
// boundaries, or npos.
std::size_t find_phrase(std::string_view text, std::string_view phrase) {
  std::size_t pos = text.find(phrase);
  while (pos != std::string_view::npos) {
    const bool left_ok = pos == 0 || !is_word_char(text[pos - 1]);
    const std::size_t end = pos + phrase.size();
    const bool right_ok = end == text.size() || !is_word_char(phrase.back()) ||
                          !is_word_char(text[end]);
    if (left_ok && right_ok) return pos;
    pos = text.find(phrase, pos + 1);
  }
  return std::string_view::npos;
}

}  // namespace

std::vector<std::string> parse_query_phrases(std::string_view contents) {
  std::vector<std::string> out;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::string p = clean_phrase(line);
    if (!p.empty() && std::find(out.begin(), out.end(), p) == out.end()) {
      out.push_back(std::move(p));
    }
  }
  return out;
}

const std::vector<std::string>& default_query_phrases() {
  static const std::vector<std::string> kPhrases =
      parse_query_phrases(defaults::kQueryPhrases);
  return kPhrases;
}

std::vector<std::string> load_query_phrases(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open query phrase list");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!is_valid_utf8(buf.str())) {
    throw IoError(path.string(), "query phrase list is not valid UTF-8");
  }
  return parse_query_phrases(buf.str());
}

std::vector<QueryPhraseHit> extract_query_phrase_sentences(
    const Document& doc, const std::vector<std::string>& phrases) {
  std::vector<QueryPhraseHit> hits;
  for (const auto& s : doc.sentences) {
    const std::string folded = fold(s.text);
    std::size_t best_pos = std::string::npos;
    const std::string* best = nullptr;
    for (const auto& p : phrases) {
      if (p.empty()) continue;
      const std::size_t pos = find_phrase(folded, p);
      if (pos < best_pos) best_pos = pos, best = &p;
    }
    if (best != nullptr) {
      hits.push_back({*best, s.index, s.text});
    }
  }
  return hits;
}

std::vector<QueryPhraseHit> extract_query_phrase_sentences(const Document& doc) {
  return extract_query_phrase_sentences(doc, default_query_phrases());
}

}  // namespace simdetect
