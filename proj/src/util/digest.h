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

#ifndef SIMDETECT_UTIL_DIGEST_H_
#define SIMDETECT_UTIL_DIGEST_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace simdetect {

// 64-bit FNV-1a, incremental.
class Fnv1a {
 public:
  void update(std::string_view bytes);
  // Feeds a length prefix so that sequences of strings hash unambiguously.
  void update_field(std::string_view bytes);
  std::uint64_t value() const { return hash_; }
  std::string hex() const;

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace simdetect

#endif  // SIMDETECT_UTIL_DIGEST_H_
