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

#ifndef SIMDETECT_SCORE_H_
#define SIMDETECT_SCORE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace simdetect {

// Every scheme and feature that produces a resemblance score.
enum class Method {
  kFullChar,
  kTrigramJaccard,
  kStatement,
  kFirstSentence,
  kQueryPhrase,
  kTopKeyword,
  kLcsF,
};

inline constexpr Method kAllMethods[] = {
    Method::kFullChar,      Method::kTrigramJaccard, Method::kStatement,
    Method::kFirstSentence, Method::kQueryPhrase,    Method::kTopKeyword,
    Method::kLcsF,
};

std::string_view method_name(Method m);
// Accepts the canonical names plus the short aliases "trigram" and "lcs".
std::optional<Method> parse_method(std::string_view name);

enum class ScoreStatus {
  kOk,
  // Nothing to compare (e.g. both gram sets empty); value is 0.
  kDegenerate,
  // The feature does not apply to this pair (no query phrase in ref).
  kNotApplicable,
};

std::string_view status_name(ScoreStatus s);

// Counters behind a score. Which fields are meaningful depends on the method.
struct ScoreDetail {
  // Set-based measures.
  std::uint64_t intersection = 0;
  std::uint64_t union_size = 0;
  // R = N / |A|.
  std::uint64_t common = 0;
  std::uint64_t ref_size = 0;
  // LCS F-measure.
  std::uint64_t lcs_length = 0;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  double r_lcs = 0.0;
  double p_lcs = 0.0;
  double beta = 0.0;
  // Sentence-level features: suspect sentence that produced the value.
  std::optional<std::size_t> best_sentence;

  bool operator==(const ScoreDetail&) const = default;
};

struct ResemblanceScore {
  double value = 0.0;
  Method method = Method::kStatement;
  ScoreStatus status = ScoreStatus::kOk;
  ScoreDetail detail;

  bool applicable() const { return status == ScoreStatus::kOk; }
  bool operator==(const ResemblanceScore&) const = default;
};

}  // namespace simdetect

#endif  // SIMDETECT_SCORE_H_
