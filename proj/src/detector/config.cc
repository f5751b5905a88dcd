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
#include <cmath>
#include <string>

#include "simdetect/detector.h"
#include "simdetect/error.h"
#include "util/digest.h"

namespace simdetect {

std::set<Method> DetectorConfig::default_methods() {
  return {Method::kStatement, Method::kTopKeyword, Method::kFirstSentence,
          Method::kQueryPhrase, Method::kLcsF};
}

double DetectorConfig::weight(Method m) const {
  const auto it = feature_weights.find(m);
  return it == feature_weights.end() ? 1.0 : it->second;
}

void DetectorConfig::validate() const {
  if (k_char == 0) throw InvalidParameterError("k_char must be >= 1");
  if (k_top == 0) throw InvalidParameterError("k_top must be >= 1");
  if (const auto* fixed = std::get_if<FixedBeta>(&beta);
      fixed != nullptr && !(fixed->value >= 0.0 && std::isfinite(fixed->value))) {
    throw InvalidParameterError("beta must be a finite non-negative number");
  }
  if (enabled.empty()) throw InvalidParameterError("no feature enabled");
  double sum = 0.0;
  for (const auto& [m, w] : feature_weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidParameterError("weight of " + std::string(method_name(m)) +
                                  " must be a finite non-negative number");
    }
  }
  for (Method m : enabled) sum += weight(m);
  if (!(sum > 0.0)) {
    throw InvalidParameterError("enabled feature weights must sum to a positive value");
  }
}

double combine(const std::map<Method, ResemblanceScore>& scores,
               const DetectorConfig& cfg) {
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& [m, s] : scores) {
    if (!s.applicable()) continue;
    const double w = cfg.weight(m);
    weighted += w * s.value;
    total += w;
  }
  if (total <= 0.0) return 0.0;
  // Rounding can leave the mean a hair outside [0, 1].
  return std::clamp(weighted / total, 0.0, 1.0);
}

IndexSnapshot IndexSnapshot::of(const DetectorConfig& cfg) {
  IndexSnapshot s;
  s.k_char = cfg.k_char;
  s.k_top = cfg.k_top;
  s.enabled = cfg.enabled;
  s.stopwords_digest = cfg.stopwords.digest();
  Fnv1a h;
  for (const auto& p : cfg.phrases) h.update_field(p);
  s.phrases_digest = h.hex();
  return s;
}

}  // namespace simdetect
