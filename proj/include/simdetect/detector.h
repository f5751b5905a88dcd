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

#ifndef SIMDETECT_DETECTOR_H_
#define SIMDETECT_DETECTOR_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "simdetect/features.h"
#include "simdetect/fingerprint.h"
#include "simdetect/score.h"
#include "simdetect/stopwords.h"
#include "simdetect/textprep.h"

namespace simdetect {

inline constexpr int kIndexSchemaVersion = 1;

struct DetectorConfig {
  std::size_t k_char = 4;
  std::size_t k_top = 10;
  BetaMode beta = FixedBeta{1.0};
  // Missing entries weigh 1.
  std::map<Method, double> feature_weights;
  std::set<Method> enabled = default_methods();
  StopwordList stopwords = StopwordList::english();
  std::vector<std::string> phrases = default_query_phrases();
  std::optional<std::filesystem::path> stopword_path;
  std::optional<std::filesystem::path> phrase_path;

  static std::set<Method> default_methods();

  double weight(Method m) const;
  // Throws InvalidParameterError when a field is out of range.
  void validate() const;
};

struct FeatureReport {
  std::string ref_id;
  std::string susp_id;
  std::map<Method, ResemblanceScore> scores;
  // Features excluded from the combined score (not applicable or degenerate).
  std::set<Method> skipped;
  double combined = 0.0;
};

// Weighted mean of the applicable scores, weights renormalized over them.
// 0 when nothing is applicable.
double combine(const std::map<Method, ResemblanceScore>& scores,
               const DetectorConfig& cfg);

// Everything needed to score a reference document without its raw text.
struct ReferenceArtifacts {
  std::string id;
  // Sorted statement fingerprint keys.
  std::vector<std::string> fingerprints;
  // Ranked top keywords.
  std::vector<std::string> keywords;
  std::vector<std::string> first_grams;
  // One gram list per query-phrase sentence.
  std::vector<std::vector<std::string>> query_grams;
  // Tokens of the key sentences (first + query-phrase sentences).
  std::vector<std::vector<std::string>> key_tokens;
  // Only filled when the scheme is enabled.
  std::vector<std::string> char_grams;
  std::vector<std::string> trigrams;
  // Digest of the document's token stream.
  std::string digest;

  bool operator==(const ReferenceArtifacts&) const = default;
};

ReferenceArtifacts extract_artifacts(const Document& doc, const DetectorConfig& cfg);

// The suspect side of a comparison, computed once per suspect.
struct SuspectProfile {
  const Document* doc = nullptr;
  GramSet statement_keys;
  GramSet keywords;
  std::vector<GramSet> sentence_grams;
  GramSet char_grams;
  GramSet trigrams;
};

SuspectProfile profile_suspect(const Document& susp, const DetectorConfig& cfg);

FeatureReport score_pair(const ReferenceArtifacts& ref, const SuspectProfile& susp,
                         const DetectorConfig& cfg);

// All enabled scores for one pair plus their combination. Deterministic.
FeatureReport analyze_pair(const Document& ref, const Document& susp,
                           const DetectorConfig& cfg);

// ---------------------------------------------------------------------------
// Corpus index

// The part of the configuration that determines index contents.
struct IndexSnapshot {
  std::size_t k_char = 4;
  std::size_t k_top = 10;
  std::set<Method> enabled;
  std::string stopwords_digest;
  std::string phrases_digest;

  static IndexSnapshot of(const DetectorConfig& cfg);
  bool operator==(const IndexSnapshot&) const = default;
};

struct CorpusIndex {
  IndexSnapshot snapshot;
  std::map<std::string, ReferenceArtifacts> entries;

  bool operator==(const CorpusIndex&) const = default;
};

// Throws DuplicateIdError naming the first repeated id. `jobs` > 1 extracts
// artifacts on that many threads; the result does not depend on it.
CorpusIndex build_index(const std::vector<Document>& docs,
                        const DetectorConfig& cfg, std::size_t jobs = 1);

// Throws VersionError when `cfg` disagrees with the index snapshot.
void check_compatible(const CorpusIndex& index, const DetectorConfig& cfg);

// Descending by combined score, ties by doc id; at most top_n entries.
std::vector<std::pair<std::string, FeatureReport>> rank_candidates(
    const Document& susp, const CorpusIndex& index, const DetectorConfig& cfg,
    std::size_t top_n);

// Line-delimited JSON: a header record then one record per entry, sorted by
// id. Byte-stable.
std::string serialize_index(const CorpusIndex& index);
// Throws VersionError or MalformedRecordError.
CorpusIndex parse_index(std::string_view contents);

// Throws IoError on write failure.
void save_index(const CorpusIndex& index, const std::filesystem::path& path);
// Throws IoError, VersionError or MalformedRecordError.
CorpusIndex load_index(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Reports

// Fixed 12-digit decimal.
std::string format_score(double value);

std::string report_to_json(const FeatureReport& report);
std::string report_to_text(const FeatureReport& report);
std::string ranking_to_json(
    const std::string& susp_id,
    const std::vector<std::pair<std::string, FeatureReport>>& ranking);
std::string ranking_to_text(
    const std::vector<std::pair<std::string, FeatureReport>>& ranking);

// ---------------------------------------------------------------------------
// Benchmark

struct BenchRow {
  std::string scheme;
  std::size_t documents = 0;
  std::size_t pairs = 0;
  double seconds_per_pair = 0.0;
  double bytes_per_document = 0.0;
};

// Storage bytes of each scheme's fingerprint for one document.
std::size_t full_char_bytes(const Document& doc, std::size_t k);
std::size_t trigram_bytes(const Document& doc);
std::size_t statement_bytes(const Document& doc);
std::size_t feature_bytes(const ReferenceArtifacts& artifacts);

// Times every unordered pair (self pairs included) under each scheme: full
// character k-grams, word trigrams, statement fingerprints, and the feature
// pipeline. Empty input yields no rows.
std::vector<BenchRow> run_benchmark(const std::vector<Document>& docs,
                                    const DetectorConfig& cfg);

std::string bench_to_text(const std::vector<BenchRow>& rows);
std::string bench_to_json(const std::vector<BenchRow>& rows);

}  // namespace simdetect

#endif  // SIMDETECT_DETECTOR_H_
