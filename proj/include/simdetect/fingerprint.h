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

#ifndef SIMDETECT_FINGERPRINT_H_
#define SIMDETECT_FINGERPRINT_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "simdetect/score.h"
#include "simdetect/textprep.h"

namespace simdetect {

using GramSet = std::set<std::string>;

enum class GramKind { kCharacter, kWord };

// Grams of one text with their occurrence counts.
//
// Invariants: every count >= 1, total() == sum of counts.
class GramMultiset {
 public:
  GramMultiset(GramKind kind, std::size_t k) : kind_(kind), k_(k) {}

  void add(std::string gram, std::uint64_t count = 1);

  GramKind kind() const { return kind_; }
  std::size_t k() const { return k_; }
  const std::map<std::string, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t count(const std::string& gram) const;
  std::uint64_t total() const { return total_; }
  std::size_t distinct() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }
  GramSet keys() const;

 private:
  GramKind kind_;
  std::size_t k_;
  std::map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Relative frequencies x_i = m_i / sum_j m_j of a gram multiset.
class GramWeights {
 public:
  explicit GramWeights(const GramMultiset& grams);

  // 0 for grams that are not in the source multiset.
  double weight(const std::string& gram) const;
  // Numerator of the weight: the raw count m_i.
  std::uint64_t count(const std::string& gram) const;
  // Denominator shared by all weights.
  std::uint64_t total() const { return total_; }
  const std::map<std::string, double>& weights() const { return weights_; }

 private:
  std::map<std::string, std::uint64_t> counts_;
  std::uint64_t total_;
  std::map<std::string, double> weights_;
};

inline constexpr std::size_t kStatementGramLength = 4;
inline constexpr std::size_t kStatementGramsPerSentence = 3;

struct SentenceFingerprint {
  std::size_t sentence_index = 0;
  std::array<std::string, kStatementGramsPerSentence> grams;
  // grams[0] + grams[1] + grams[2].
  std::string key;

  bool operator==(const SentenceFingerprint&) const = default;
};

// Every contiguous k-character substring of `text` with whitespace removed.
// Characters are Unicode code points. Throws InvalidParameterError for k = 0.
GramMultiset char_kgrams(std::string_view text, std::size_t k);

// Set of consecutive n-word sequences joined by single spaces.
GramMultiset word_ngrams(std::string_view text, std::size_t n);
GramSet word_trigrams(std::string_view text);

// R = N / |A|: share of A's distinct grams that also occur in B.
// Degenerate (0) when A is empty.
ResemblanceScore full_resemblance(const GramMultiset& a, const GramMultiset& b);
ResemblanceScore full_resemblance(const GramSet& a, const GramSet& b);

// |A n B| / |A u B|. Degenerate (0) when both sets are empty.
ResemblanceScore jaccard(const GramSet& a, const GramSet& b,
                         Method method = Method::kTrigramJaccard);

// Throws InvalidParameterError for an empty multiset.
GramWeights gram_weights(const GramMultiset& grams);

// The three least frequent distinct 4-grams of the sentence under the given
// document-level weights, lowest weight first, ties broken by first
// occurrence in the sentence. None when the sentence has fewer than three
// distinct 4-grams.
std::optional<SentenceFingerprint> least_frequent_fingerprint(
    const Sentence& sentence, const GramWeights& weights);

// Fingerprints of every sentence of the document, weights taken from the
// whole document's 4-gram multiset.
std::vector<SentenceFingerprint> statement_fingerprints(const Document& doc);
GramSet statement_keys(const Document& doc);

// Jaccard over the documents' sentence fingerprint keys.
ResemblanceScore statement_resemblance(const Document& a, const Document& b);

}  // namespace simdetect

#endif  // SIMDETECT_FINGERPRINT_H_
