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

#ifndef SIMDETECT_TEXTPREP_H_
#define SIMDETECT_TEXTPREP_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "simdetect/stopwords.h"

namespace simdetect {

// One sentence ("statement") of a document.
struct Sentence {
  std::size_t index = 0;
  // Trimmed raw text, terminator included.
  std::string text;
  // normalize(text).
  std::string normalized;
  // Word tokens of `normalized`, in order of appearance.
  std::vector<std::string> tokens;
  // Stemmed tokens with stopwords removed.
  std::vector<std::string> content_tokens;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::string id;
  std::string raw_text;
  std::vector<Sentence> sentences;
  std::string normalized_text;

  bool empty() const { return sentences.empty(); }
};

// Lowercases, turns punctuation and whitespace runs into single spaces,
// drops apostrophes, and trims. Digits and non-ASCII letters are kept.
// Idempotent.
std::string normalize(std::string_view text);

// Splits normalized text on whitespace.
std::vector<std::string> tokenize(std::string_view sentence_text);

// Returns `tokens` without the entries present in `stopwords`, order kept.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordList& stopwords);

// Original Porter (1980) suffix-stripping stemmer. Expects a lowercase word.
std::string stem(std::string_view token);

// Splits raw text on '.', '!' or '?' followed by whitespace or end of text.
// Sentences without any word token are dropped; indices are dense from 0.
std::vector<Sentence> split_sentences(std::string_view text,
                                      const StopwordList& stopwords);
std::vector<Sentence> split_sentences(std::string_view text);

Document make_document(std::string id, std::string raw_text,
                       const StopwordList& stopwords);
Document make_document(std::string id, std::string raw_text);

bool is_valid_utf8(std::string_view bytes);

}  // namespace simdetect

#endif  // SIMDETECT_TEXTPREP_H_
