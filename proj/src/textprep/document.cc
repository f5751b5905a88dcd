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

namespace simdetect {
namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ascii_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ascii_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Sentence> split_sentences(std::string_view text,
                                      const StopwordList& stopwords) {
  std::vector<Sentence> out;
  const auto emit = [&](std::string_view piece) {
    piece = trim(piece);
    if (piece.empty()) return;
    Sentence s;
    s.normalized = normalize(piece);
    s.tokens = tokenize(s.normalized);
    if (s.tokens.empty()) return;
    s.index = out.size();
    s.text = std::string(piece);
    for (const auto& t : remove_stopwords(s.tokens, stopwords)) {
      s.content_tokens.push_back(stem(t));
    }
    out.push_back(std::move(s));
  };

  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_terminator(text[i])) continue;
    if (i + 1 == text.size() || is_ascii_space(text[i + 1])) {
      emit(text.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  if (start < text.size()) emit(text.substr(start));
  return out;
}

std::vector<Sentence> split_sentences(std::string_view text) {
  return split_sentences(text, StopwordList::english());
}

Document make_document(std::string id, std::string raw_text,
                       const StopwordList& stopwords) {
  Document doc;
  doc.id = std::move(id);
  doc.sentences = split_sentences(raw_text, stopwords);
  doc.normalized_text = normalize(raw_text);
  doc.raw_text = std::move(raw_text);
  return doc;
}

Document make_document(std::string id, std::string raw_text) {
  return make_document(std::move(id), std::move(raw_text),
                       StopwordList::english());
}

}  // namespace simdetect
