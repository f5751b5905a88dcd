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

#include <vector>

#include "simdetect/features.h"

namespace simdetect {

std::vector<GramSet> sentence_gram_sets(const Document& doc, std::size_t k) {
  std::vector<GramSet> out;
  out.reserve(doc.sentences.size());
  for (const auto& s : doc.sentences) {
    out.push_back(char_kgrams(s.normalized, k).keys());
  }
  return out;
}

ResemblanceScore best_sentence_jaccard(const GramSet& key,
                                       const std::vector<GramSet>& susp_sentences,
                                       Method method) {
  ResemblanceScore best;
  best.method = method;
  if (key.empty()) {
    best.status = ScoreStatus::kDegenerate;
    return best;
  }
  best.detail.union_size = key.size();
  for (std::size_t i = 0; i < susp_sentences.size(); ++i) {
    ResemblanceScore s = jaccard(key, susp_sentences[i], method);
    if (!best.detail.best_sentence || s.value > best.value) {
      s.detail.best_sentence = i;
      best = s;
    }
  }
  return best;
}

ResemblanceScore first_sentence_similarity(const Document& ref,
                                           const Document& susp, std::size_t k) {
  GramSet key;
  if (!ref.sentences.empty()) {
    key = char_kgrams(ref.sentences.front().normalized, k).keys();
  }
  return best_sentence_jaccard(key, sentence_gram_sets(susp, k),
                               Method::kFirstSentence);
}

ResemblanceScore query_grams_similarity(const std::vector<GramSet>& query_grams,
                                        const std::vector<GramSet>& susp_sentences,
                                        bool ref_empty) {
  ResemblanceScore out;
  out.method = Method::kQueryPhrase;
  if (ref_empty) {
    out.status = ScoreStatus::kDegenerate;
    return out;
  }
  if (query_grams.empty()) {
    out.status = ScoreStatus::kNotApplicable;
    return out;
  }
  double sum = 0.0;
  std::size_t scored = 0;
  for (const auto& q : query_grams) {
    const ResemblanceScore s =
        best_sentence_jaccard(q, susp_sentences, Method::kQueryPhrase);
    if (!s.applicable()) continue;
    if (scored == 0) out.detail = s.detail;
    sum += s.value;
    ++scored;
  }
  if (scored == 0) {
    out.status = ScoreStatus::kDegenerate;
    return out;
  }
  out.value = sum / static_cast<double>(scored);
  return out;
}

ResemblanceScore query_phrase_similarity(const Document& ref,
                                         const Document& susp, std::size_t k,
                                         const std::vector<std::string>& phrases) {
  std::vector<GramSet> query_grams;
  for (const auto& hit : extract_query_phrase_sentences(ref, phrases)) {
    query_grams.push_back(
        char_kgrams(ref.sentences[hit.sentence_index].normalized, k).keys());
  }
  return query_grams_similarity(query_grams, sentence_gram_sets(susp, k),
                                ref.sentences.empty());
}

ResemblanceScore query_phrase_similarity(const Document& ref,
                                         const Document& susp, std::size_t k) {
  return query_phrase_similarity(ref, susp, k, default_query_phrases());
}

}  // namespace simdetect
