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
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "simdetect/detector.h"
#include "simdetect/error.h"

namespace simdetect {

CorpusIndex build_index(const std::vector<Document>& docs,
                        const DetectorConfig& cfg, std::size_t jobs) {
  cfg.validate();
  {
    std::set<std::string_view> ids;
    for (const auto& d : docs) {
      if (!ids.insert(d.id).second) throw DuplicateIdError(d.id);
    }
  }

  std::vector<ReferenceArtifacts> artifacts(docs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  const auto worker = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) {
      try {
        artifacts[i] = extract_artifacts(docs[i], cfg);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(docs.size(), 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  CorpusIndex index;
  index.snapshot = IndexSnapshot::of(cfg);
  for (auto& a : artifacts) {
    std::string id = a.id;
    index.entries.emplace(std::move(id), std::move(a));
  }
  return index;
}

void check_compatible(const CorpusIndex& index, const DetectorConfig& cfg) {
  const IndexSnapshot want = IndexSnapshot::of(cfg);
  const IndexSnapshot& have = index.snapshot;
  const auto mismatch = [](const std::string& what) {
    throw VersionError("index was built with a different " + what);
  };
  if (want.k_char != have.k_char) mismatch("k (" + std::to_string(have.k_char) + ")");
  if (want.k_top != have.k_top) {
    mismatch("top-keyword count (" + std::to_string(have.k_top) + ")");
  }
  if (want.stopwords_digest != have.stopwords_digest) mismatch("stopword list");
  if (want.phrases_digest != have.phrases_digest) mismatch("query phrase list");
  for (Method m : cfg.enabled) {
    if (!have.enabled.contains(m)) {
      mismatch("feature set (missing " + std::string(method_name(m)) + ")");
    }
  }
}

std::vector<std::pair<std::string, FeatureReport>> rank_candidates(
    const Document& susp, const CorpusIndex& index, const DetectorConfig& cfg,
    std::size_t top_n) {
  cfg.validate();
  check_compatible(index, cfg);
  const SuspectProfile profile = profile_suspect(susp, cfg);
  std::vector<std::pair<std::string, FeatureReport>> ranked;
  ranked.reserve(index.entries.size());
  for (const auto& [id, artifacts] : index.entries) {
    ranked.emplace_back(id, score_pair(artifacts, profile, cfg));
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second.combined != b.second.combined) {
      return a.second.combined > b.second.combined;
    }
    return a.first < b.first;
  });
  if (ranked.size() > top_n) ranked.resize(top_n);
  return ranked;
}

}  // namespace simdetect
