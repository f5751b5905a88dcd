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
#include <vector>

#include "simdetect/detector.h"
#include "util/digest.h"

namespace simdetect {
namespace {

std::vector<std::string> to_vector(const GramSet& s) { return {s.begin(), s.end()}; }
GramSet to_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

std::string token_digest(const Document& doc) {
  Fnv1a h;
  for (const auto& s : doc.sentences) {
    h.update_field(std::to_string(s.tokens.size()));
    for (const auto& t : s.tokens) h.update_field(t);
  }
  return h.hex();
}

}  // namespace

ReferenceArtifacts extract_artifacts(const Document& doc, const DetectorConfig& cfg) {
  ReferenceArtifacts a;
  a.id = doc.id;
  a.fingerprints = to_vector(statement_keys(doc));
  a.keywords = top_keywords(doc, cfg.k_top).keywords;
  if (!doc.sentences.empty()) {
    a.first_grams =
        to_vector(char_kgrams(doc.sentences.front().normalized, cfg.k_char).keys());
  }
  for (const auto& hit : extract_query_phrase_sentences(doc, cfg.phrases)) {
    a.query_grams.push_back(to_vector(
        char_kgrams(doc.sentences[hit.sentence_index].normalized, cfg.k_char).keys()));
  }
  a.key_tokens = key_sentence_tokens(doc, cfg.phrases);
  if (cfg.enabled.contains(Method::kFullChar)) {
    a.char_grams = to_vector(char_kgrams(doc.normalized_text, cfg.k_char).keys());
  }
  if (cfg.enabled.contains(Method::kTrigramJaccard)) {
    a.trigrams = to_vector(word_trigrams(doc.normalized_text));
  }
  a.digest = token_digest(doc);
  return a;
}

SuspectProfile profile_suspect(const Document& susp, const DetectorConfig& cfg) {
  SuspectProfile p;
  p.doc = &susp;
  const auto& on = cfg.enabled;
  if (on.contains(Method::kStatement)) p.statement_keys = statement_keys(susp);
  if (on.contains(Method::kTopKeyword)) {
    p.keywords = top_keywords(susp, cfg.k_top).as_set();
  }
  if (on.contains(Method::kFirstSentence) || on.contains(Method::kQueryPhrase)) {
    p.sentence_grams = sentence_gram_sets(susp, cfg.k_char);
  }
  if (on.contains(Method::kFullChar)) {
    p.char_grams = char_kgrams(susp.normalized_text, cfg.k_char).keys();
  }
  if (on.contains(Method::kTrigramJaccard)) {
    p.trigrams = word_trigrams(susp.normalized_text);
  }
  return p;
}

FeatureReport score_pair(const ReferenceArtifacts& ref, const SuspectProfile& susp,
                         const DetectorConfig& cfg) {
  FeatureReport report;
  report.ref_id = ref.id;
  report.susp_id = susp.doc->id;
  for (Method m : cfg.enabled) {
    ResemblanceScore s;
    switch (m) {
      case Method::kFullChar:
        s = full_resemblance(to_set(ref.char_grams), susp.char_grams);
        break;
      case Method::kTrigramJaccard:
        s = jaccard(to_set(ref.trigrams), susp.trigrams, Method::kTrigramJaccard);
        break;
      case Method::kStatement:
        s = jaccard(to_set(ref.fingerprints), susp.statement_keys, Method::kStatement);
        break;
      case Method::kTopKeyword:
        s = jaccard(to_set(ref.keywords), susp.keywords, Method::kTopKeyword);
        break;
      case Method::kFirstSentence:
        s = best_sentence_jaccard(to_set(ref.first_grams), susp.sentence_grams,
                                  Method::kFirstSentence);
        break;
      case Method::kQueryPhrase: {
        std::vector<GramSet> query;
        for (const auto& q : ref.query_grams) query.push_back(to_set(q));
        s = query_grams_similarity(query, susp.sentence_grams, ref.key_tokens.empty());
        break;
      }
      case Method::kLcsF:
        s = lcs_similarity(ref.key_tokens, *susp.doc, cfg.beta);
        break;
    }
    if (!s.applicable()) report.skipped.insert(m);
    report.scores.emplace(m, s);
  }
  report.combined = combine(report.scores, cfg);
  return report;
}

FeatureReport analyze_pair(const Document& ref, const Document& susp,
                           const DetectorConfig& cfg) {
  cfg.validate();
  return score_pair(extract_artifacts(ref, cfg), profile_suspect(susp, cfg), cfg);
}

}  // namespace simdetect
