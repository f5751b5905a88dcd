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

#ifndef SIMDETECT_STOPWORDS_H_
#define SIMDETECT_STOPWORDS_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

namespace simdetect {

// A fixed set of lowercase stopwords.
//
// File format: UTF-8, one word per line. Lines starting with '#' and blank
// lines are ignored; words are trimmed and lowercased.
class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(std::set<std::string> words);

  // The built-in English list (same content as data/stopwords.txt).
  static const StopwordList& english();

  static StopwordList parse(std::string_view contents);
  // Throws IoError when the file cannot be read.
  static StopwordList from_file(const std::filesystem::path& path);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  const std::set<std::string, std::less<>>& words() const { return words_; }

  // Stable hex digest of the sorted word list.
  std::string digest() const;

 private:
  std::set<std::string, std::less<>> words_;
};

}  // namespace simdetect

#endif  // SIMDETECT_STOPWORDS_H_
