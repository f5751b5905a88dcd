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

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "json.hpp"
#include "simdetect/detector.h"

namespace simdetect {
namespace {

// Keeps the timed comparisons observable.
volatile double bench_sink = 0.0;

std::size_t multiset_bytes(const GramMultiset& grams) {
  std::size_t bytes = 0;
  for (const auto& [g, m] : grams.counts()) bytes += g.size() * m;
  return bytes;
}

std::size_t strings_bytes(const std::vector<std::string>& v) {
  std::size_t bytes = 0;
  for (const auto& s : v) bytes += s.size();
  return bytes;
}

BenchRow time_scheme(std::string scheme, const std::vector<Document>& docs,
                     const std::function<double(const Document&, const Document&)>& compare,
                     const std::function<std::size_t(const Document&)>& bytes) {
  BenchRow row;
  row.scheme = std::move(scheme);
  row.documents = docs.size();
  double sink = 0.0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < docs.size(); ++i) {
    for (std::size_t j = i; j < docs.size(); ++j) {
      sink += compare(docs[i], docs[j]);
      ++row.pairs;
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  bench_sink = sink;
  row.seconds_per_pair = row.pairs ? elapsed.count() / static_cast<double>(row.pairs) : 0.0;
  std::size_t total = 0;
  for (const auto& d : docs) total += bytes(d);
  row.bytes_per_document =
      docs.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(docs.size());
  return row;
}

}  // namespace

std::size_t full_char_bytes(const Document& doc, std::size_t k) {
  return multiset_bytes(char_kgrams(doc.normalized_text, k));
}

std::size_t trigram_bytes(const Document& doc) {
  return multiset_bytes(word_ngrams(doc.normalized_text, 3));
}

std::size_t statement_bytes(const Document& doc) {
  std::size_t bytes = 0;
  for (const auto& fp : statement_fingerprints(doc)) bytes += fp.key.size();
  return bytes;
}

std::size_t feature_bytes(const ReferenceArtifacts& a) {
  std::size_t bytes = strings_bytes(a.fingerprints) + strings_bytes(a.keywords) +
                      strings_bytes(a.first_grams);
  for (const auto& q : a.query_grams) bytes += strings_bytes(q);
  for (const auto& t : a.key_tokens) bytes += strings_bytes(t);
  return bytes;
}

std::vector<BenchRow> run_benchmark(const std::vector<Document>& docs,
                                    const DetectorConfig& cfg) {
  cfg.validate();
  std::vector<BenchRow> rows;
  if (docs.empty()) return rows;
  const std::size_t k = cfg.k_char;
  rows.push_back(time_scheme(
      "full_char", docs,
      [k](const Document& a, const Document& b) {
        return full_resemblance(char_kgrams(a.normalized_text, k),
                                char_kgrams(b.normalized_text, k))
            .value;
      },
      [k](const Document& d) { return full_char_bytes(d, k); }));
  rows.push_back(time_scheme(
      "trigram", docs,
      [](const Document& a, const Document& b) {
        return jaccard(word_trigrams(a.normalized_text),
                       word_trigrams(b.normalized_text))
            .value;
      },
      trigram_bytes));
  rows.push_back(time_scheme(
      "statement", docs,
      [](const Document& a, const Document& b) {
        return statement_resemblance(a, b).value;
      },
      statement_bytes));
  rows.push_back(time_scheme(
      "features", docs,
      [&cfg](const Document& a, const Document& b) {
        return analyze_pair(a, b, cfg).combined;
      },
      [&cfg](const Document& d) { return feature_bytes(extract_artifacts(d, cfg)); }));
  return rows;
}

std::string bench_to_text(const std::vector<BenchRow>& rows) {
  std::string out = "scheme      docs   pairs   us/pair      bytes/doc\n";
  char line[160];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof(line), "%-10s %5zu %7zu %9.2f %14.1f\n", r.scheme.c_str(),
                  r.documents, r.pairs, r.seconds_per_pair * 1e6, r.bytes_per_document);
    out += line;
  }
  return out;
}

std::string bench_to_json(const std::vector<BenchRow>& rows) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    j.push_back({{"scheme", r.scheme},
                 {"documents", r.documents},
                 {"pairs", r.pairs},
                 {"seconds_per_pair", r.seconds_per_pair},
                 {"bytes_per_document", r.bytes_per_document}});
  }
  return j.dump();
}

}  // namespace simdetect
