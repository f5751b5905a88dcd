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
#include <vector>

#include "simdetect/fingerprint.h"
#include "textprep/utf8.h"

namespace simdetect {

std::optional<SentenceFingerprint> least_frequent_fingerprint(
    const Sentence& sentence, const GramWeights& weights) {
  const GramMultiset own = char_kgrams(sentence.normalized, kStatementGramLength);
  if (own.distinct() < kStatementGramsPerSentence) return std::nullopt;

  // Distinct grams in order of first occurrence.
  std::vector<std::string> ordered;
  {
    std::u32string stripped;
    for (char32_t cp : utf8::decode(sentence.normalized)) {
      if (cp != U' ') stripped.push_back(cp);
    }
    GramSet seen;
    const std::u32string_view view(stripped);
    for (std::size_t i = 0; i + kStatementGramLength <= view.size(); ++i) {
      std::string g = utf8::encode(view.substr(i, kStatementGramLength));
      if (seen.insert(g).second) ordered.push_back(std::move(g));
    }
  }

  // Weights share one denominator, so comparing counts compares weights
  // exactly. stable_sort keeps first-occurrence order among ties.
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const std::string& a, const std::string& b) {
                     return weights.count(a) < weights.count(b);
                   });

  SentenceFingerprint fp;
  fp.sentence_index = sentence.index;
  for (std::size_t i = 0; i < kStatementGramsPerSentence; ++i) {
    fp.grams[i] = ordered[i];
    fp.key += ordered[i];
  }
  return fp;
}

std::vector<SentenceFingerprint> statement_fingerprints(const Document& doc) {
  std::vector<SentenceFingerprint> out;
  const GramMultiset doc_grams =
      char_kgrams(doc.normalized_text, kStatementGramLength);
  if (doc_grams.empty()) return out;
  const GramWeights weights = gram_weights(doc_grams);
  for (const auto& sentence : doc.sentences) {
    if (auto fp = least_frequent_fingerprint(sentence, weights)) {
      out.push_back(std::move(*fp));
    }
  }
  return out;
}

GramSet statement_keys(const Document& doc) {
  GramSet keys;
  for (auto& fp : statement_fingerprints(doc)) keys.insert(std::move(fp.key));
  return keys;
}

ResemblanceScore statement_resemblance(const Document& a, const Document& b) {
  return jaccard(statement_keys(a), statement_keys(b), Method::kStatement);
}

}  // namespace simdetect
