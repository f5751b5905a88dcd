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
#include <iterator>

#include "simdetect/fingerprint.h"
#include "simdetect/score.h"

namespace simdetect {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kFullChar: return "full_char";
    case Method::kTrigramJaccard: return "trigram_jaccard";
    case Method::kStatement: return "statement";
    case Method::kFirstSentence: return "first_sentence";
    case Method::kQueryPhrase: return "query_phrase";
    case Method::kTopKeyword: return "top_keyword";
    case Method::kLcsF: return "lcs_f";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "trigram") return Method::kTrigramJaccard;
  if (name == "lcs") return Method::kLcsF;
  for (Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view status_name(ScoreStatus s) {
  switch (s) {
    case ScoreStatus::kOk: return "ok";
    case ScoreStatus::kDegenerate: return "degenerate";
    case ScoreStatus::kNotApplicable: return "not_applicable";
  }
  return "unknown";
}

namespace {

std::size_t intersection_size(const GramSet& a, const GramSet& b) {
  std::size_t n = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++n, ++ia, ++ib;
    }
  }
  return n;
}

}  // namespace

ResemblanceScore full_resemblance(const GramSet& a, const GramSet& b) {
  ResemblanceScore s;
  s.method = Method::kFullChar;
  s.detail.ref_size = a.size();
  if (a.empty()) {
    s.status = ScoreStatus::kDegenerate;
    return s;
  }
  s.detail.common = intersection_size(a, b);
  s.value = static_cast<double>(s.detail.common) /
            static_cast<double>(s.detail.ref_size);
  return s;
}

ResemblanceScore full_resemblance(const GramMultiset& a, const GramMultiset& b) {
  return full_resemblance(a.keys(), b.keys());
}

ResemblanceScore jaccard(const GramSet& a, const GramSet& b, Method method) {
  ResemblanceScore s;
  s.method = method;
  const std::size_t inter = intersection_size(a, b);
  s.detail.intersection = inter;
  s.detail.union_size = a.size() + b.size() - inter;
  if (s.detail.union_size == 0) {
    s.status = ScoreStatus::kDegenerate;
    return s;
  }
  s.value = static_cast<double>(inter) / static_cast<double>(s.detail.union_size);
  return s;
}

}  // namespace simdetect
