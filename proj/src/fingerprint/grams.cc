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

#include "simdetect/error.h"
#include "simdetect/fingerprint.h"
#include "textprep/utf8.h"

namespace simdetect {
namespace {

bool is_whitespace(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\v' || cp == U'\f';
}

}  // namespace

void GramMultiset::add(std::string gram, std::uint64_t count) {
  if (count == 0) return;
  counts_[std::move(gram)] += count;
  total_ += count;
}

std::uint64_t GramMultiset::count(const std::string& gram) const {
  const auto it = counts_.find(gram);
  return it == counts_.end() ? 0 : it->second;
}

GramSet GramMultiset::keys() const {
  GramSet out;
  for (const auto& [gram, _] : counts_) out.insert(out.end(), gram);
  return out;
}

GramWeights::GramWeights(const GramMultiset& grams)
    : counts_(grams.counts()), total_(grams.total()) {
  for (const auto& [gram, m] : counts_) {
    weights_.emplace_hint(weights_.end(), gram,
                          static_cast<double>(m) / static_cast<double>(total_));
  }
}

double GramWeights::weight(const std::string& gram) const {
  const auto it = weights_.find(gram);
  return it == weights_.end() ? 0.0 : it->second;
}

std::uint64_t GramWeights::count(const std::string& gram) const {
  const auto it = counts_.find(gram);
  return it == counts_.end() ? 0 : it->second;
}

GramMultiset char_kgrams(std::string_view text, std::size_t k) {
  if (k == 0) throw InvalidParameterError("gram length k must be >= 1");
  std::u32string stripped;
  for (char32_t cp : utf8::decode(text)) {
    if (!is_whitespace(cp)) stripped.push_back(cp);
  }
  GramMultiset out(GramKind::kCharacter, k);
  if (stripped.size() < k) return out;
  const std::u32string_view view(stripped);
  for (std::size_t i = 0; i + k <= view.size(); ++i) {
    out.add(utf8::encode(view.substr(i, k)));
  }
  return out;
}

GramMultiset word_ngrams(std::string_view text, std::size_t n) {
  if (n == 0) throw InvalidParameterError("gram length n must be >= 1");
  const auto words = tokenize(text);
  GramMultiset out(GramKind::kWord, n);
  for (std::size_t i = 0; i + n <= words.size(); ++i) {
    std::string gram = words[i];
    for (std::size_t j = 1; j < n; ++j) {
      gram += ' ';
      gram += words[i + j];
    }
    out.add(std::move(gram));
  }
  return out;
}

GramSet word_trigrams(std::string_view text) {
  return word_ngrams(text, 3).keys();
}

GramWeights gram_weights(const GramMultiset& grams) {
  if (grams.empty()) {
    throw InvalidParameterError("gram weights of an empty multiset");
  }
  return GramWeights(grams);
}

}  // namespace simdetect
