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

#ifndef SIMDETECT_FEATURES_H_
#define SIMDETECT_FEATURES_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "simdetect/fingerprint.h"
#include "simdetect/score.h"
#include "simdetect/textprep.h"

namespace simdetect {

// ---------------------------------------------------------------------------
// Top keywords

struct KeywordSet {
  // Most frequent first; ties in alphabetical order.
  std::vector<std::string> keywords;
  std::size_t k_top = 0;

  GramSet as_set() const { return {keywords.begin(), keywords.end()}; }
};

// The k_top most frequent stemmed content terms of the document.
// Throws InvalidParameterError for k_top = 0.
KeywordSet top_keywords(const Document& doc, std::size_t k_top);

// Jaccard of the two documents' top keyword sets.
ResemblanceScore top_keyword_similarity(const Document& ref, const Document& susp,
                                        std::size_t k_top);

// ---------------------------------------------------------------------------
// Key sentence similarity (first sentence, query phrase)

// The default cue phrases, lowercased with trailing punctuation removed.
const std::vector<std::string>& default_query_phrases();

// Parses a phrase list: one phrase per line, '#' comments and blank lines
// ignored. Phrases are lowercased, whitespace-collapsed, and lose trailing
// "...", "," or ":".
std::vector<std::string> parse_query_phrases(std::string_view contents);
std::vector<std::string> load_query_phrases(const std::filesystem::path& path);

struct QueryPhraseHit {
  std::string phrase;
  std::size_t sentence_index = 0;
  std::string extracted_sentence;
};

// Sentences whose text contains one of the phrases (case-insensitive, on word
// boundaries), in document order, at most one hit per sentence.
std::vector<QueryPhraseHit> extract_query_phrase_sentences(
    const Document& doc, const std::vector<std::string>& phrases);
std::vector<QueryPhraseHit> extract_query_phrase_sentences(const Document& doc);

// Distinct character k-grams of every sentence of a document.
std::vector<GramSet> sentence_gram_sets(const Document& doc, std::size_t k);

// Highest Jaccard between `key` and any of the suspect's sentence gram sets.
// Degenerate when `key` is empty.
ResemblanceScore best_sentence_jaccard(const GramSet& key,
                                       const std::vector<GramSet>& susp_sentences,
                                       Method method);

// Character k-grams of the reference's first sentence located in the suspect:
// the best Jaccard against any single suspect sentence.
ResemblanceScore first_sentence_similarity(const Document& ref,
                                           const Document& susp, std::size_t k);

// Mean over the reference's query-phrase sentences of each one's best
// Jaccard against a suspect sentence. Not applicable when the reference has
// no query-phrase sentence.
ResemblanceScore query_phrase_similarity(const Document& ref,
                                         const Document& susp, std::size_t k,
                                         const std::vector<std::string>& phrases);
ResemblanceScore query_phrase_similarity(const Document& ref,
                                         const Document& susp, std::size_t k);

// Scores precomputed query-sentence gram sets against a suspect. `ref_empty`
// marks a reference without any sentence, which is degenerate rather than
// not applicable.
ResemblanceScore query_grams_similarity(const std::vector<GramSet>& query_grams,
                                        const std::vector<GramSet>& susp_sentences,
                                        bool ref_empty = false);

// ---------------------------------------------------------------------------
// LCS F-measure

// beta = P_LCS / R_LCS.
struct RatioBeta {
  bool operator==(const RatioBeta&) const = default;
};
struct FixedBeta {
  double value = 1.0;
  bool operator==(const FixedBeta&) const = default;
};
using BetaMode = std::variant<RatioBeta, FixedBeta>;

struct LcsResult {
  std::size_t lcs_length = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  double r_lcs = 0.0;
  double p_lcs = 0.0;
  double beta = 0.0;
  double f_lcs = 0.0;
  // Set when either sequence is empty.
  bool degenerate = false;
};

std::size_t lcs_length(const std::vector<std::string>& x,
                       const std::vector<std::string>& y);

// F = (1 + beta) R P / (R + beta P), with R = LCS/m and P = LCS/n.
// F is 0 when the LCS is empty. Throws InvalidParameterError for a negative
// fixed beta.
LcsResult lcs_fmeasure(const std::vector<std::string>& ref_tokens,
                       const std::vector<std::string>& susp_tokens,
                       const BetaMode& beta = FixedBeta{});

ResemblanceScore to_score(const LcsResult& r);

// Token sequences of the reference's key sentences: the first sentence
// followed by the query-phrase sentences, each sentence at most once.
std::vector<std::vector<std::string>> key_sentence_tokens(
    const Document& ref, const std::vector<std::string>& phrases);

// Best F_LCS over (key sentence, suspect sentence) pairs.
ResemblanceScore lcs_similarity(
    const std::vector<std::vector<std::string>>& key_tokens,
    const Document& susp, const BetaMode& beta);
ResemblanceScore lcs_similarity(const Document& ref, const Document& susp,
                                const BetaMode& beta);

}  // namespace simdetect

#endif  // SIMDETECT_FEATURES_H_
