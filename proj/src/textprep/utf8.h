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

#ifndef SIMDETECT_TEXTPREP_UTF8_H_
#define SIMDETECT_TEXTPREP_UTF8_H_

#include <string>
#include <string_view>

namespace simdetect::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes UTF-8; each invalid or truncated sequence becomes U+FFFD.
std::u32string decode(std::string_view bytes);

void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view cps);

}  // namespace simdetect::utf8

#endif  // SIMDETECT_TEXTPREP_UTF8_H_
