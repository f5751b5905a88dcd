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
#include <set>
#include <vector>

#include "simdetect/error.h"
#include "simdetect/features.h"

namespace simdetect {

std::size_t lcs_length(const std::vector<std::string>& x,
                       const std::vector<std::string>& y) {
  if (x.empty() || y.empty()) return 0;
  // Two rows of the (|x|+1) x (|y|+1) table.
  std::vector<std::size_t> prev(y.size() + 1, 0);
  std::vector<std::size_t> cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

LcsResult lcs_fmeasure(const std::vector<std::string>& ref_tokens,
                       const std::vector<std::string>& susp_tokens,
                       const BetaMode& beta) {
  if (const auto* fixed = std::get_if<FixedBeta>(&beta);
      fixed != nullptr && !(fixed->value >= 0.0)) {
    throw InvalidParameterError("beta must be a non-negative number");
  }
  LcsResult r;
  r.m = ref_tokens.size();
  r.n = susp_tokens.size();
  if (r.m == 0 || r.n == 0) {
    r.degenerate = true;
    return r;
  }
  r.lcs_length = lcs_length(ref_tokens, susp_tokens);
  r.r_lcs = static_cast<double>(r.lcs_length) / static_cast<double>(r.m);
  r.p_lcs = static_cast<double>(r.lcs_length) / static_cast<double>(r.n);
  if (r.lcs_length == 0) return r;
  if (std::holds_alternative<RatioBeta>(beta)) {
    r.beta = r.p_lcs / r.r_lcs;
  } else {
    r.beta = std::get<FixedBeta>(beta).value;
  }
  r.f_lcs = (1.0 + r.beta) * r.r_lcs * r.p_lcs / (r.r_lcs + r.beta * r.p_lcs);
  return r;
}

ResemblanceScore to_score(const LcsResult& r) {
  ResemblanceScore s;
  s.method = Method::kLcsF;
  s.value = r.f_lcs;
  s.status = r.degenerate ? ScoreStatus::kDegenerate : ScoreStatus::kOk;
  s.detail.lcs_length = r.lcs_length;
  s.detail.m = r.m;
  s.detail.n = r.n;
  s.detail.r_lcs = r.r_lcs;
  s.detail.p_lcs = r.p_lcs;
  s.detail.beta = r.beta;
  return s;
}

std::vector<std::vector<std::string>> key_sentence_tokens(
    const Document& ref, const std::vector<std::string>& phrases) {
  std::vector<std::vector<std::string>> out;
  if (ref.sentences.empty()) return out;
  std::set<std::size_t> taken = {0};
  out.push_back(ref.sentences.front().tokens);
  for (const auto& hit : extract_query_phrase_sentences(ref, phrases)) {
    if (taken.insert(hit.sentence_index).second) {
      out.push_back(ref.sentences[hit.sentence_index].tokens);
    }
  }
  return out;
}

ResemblanceScore lcs_similarity(
    const std::vector<std::vector<std::string>>& key_tokens,
    const Document& susp, const BetaMode& beta) {
  ResemblanceScore best;
  best.method = Method::kLcsF;
  best.status = ScoreStatus::kDegenerate;
  bool any_key = false;
  for (const auto& key : key_tokens) {
    if (key.empty()) continue;
    any_key = true;
    for (const auto& s : susp.sentences) {
      ResemblanceScore cand = to_score(lcs_fmeasure(key, s.tokens, beta));
      if (!cand.applicable()) continue;
      if (!best.applicable() || cand.value > best.value) {
        cand.detail.best_sentence = s.index;
        best = cand;
      }
    }
  }
  if (any_key && !best.applicable()) {
    // Reference key sentences exist but the suspect has nothing to match.
    best = ResemblanceScore{};
    best.method = Method::kLcsF;
  }
  return best;
}

ResemblanceScore lcs_similarity(const Document& ref, const Document& susp,
                                const BetaMode& beta) {
  return lcs_similarity(key_sentence_tokens(ref, default_query_phrases()), susp,
                        beta);
}

}  // namespace simdetect
