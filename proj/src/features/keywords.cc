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
#include <map>
#include <utility>
#include <vector>

#include "simdetect/error.h"
#include "simdetect/features.h"

namespace simdetect {

KeywordSet top_keywords(const Document& doc, std::size_t k_top) {
  if (k_top == 0) throw InvalidParameterError("k_top must be >= 1");
  std::map<std::string, std::size_t> freq;
  for (const auto& s : doc.sentences) {
    for (const auto& t : s.content_tokens) ++freq[t];
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(freq.begin(), freq.end());
  // freq is alphabetical already; stable_sort keeps that order among ties.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  KeywordSet out;
  out.k_top = k_top;
  for (std::size_t i = 0; i < ranked.size() && i < k_top; ++i) {
    out.keywords.push_back(std::move(ranked[i].first));
  }
  return out;
}

ResemblanceScore top_keyword_similarity(const Document& ref, const Document& susp,
                                        std::size_t k_top) {
  return jaccard(top_keywords(ref, k_top).as_set(),
                 top_keywords(susp, k_top).as_set(), Method::kTopKeyword);
}

}  // namespace simdetect
