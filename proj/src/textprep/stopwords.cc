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

#include "simdetect/stopwords.h"

#include <fstream>
#include <sstream>

#include "defaults.h"
#include "simdetect/error.h"
#include "simdetect/textprep.h"
#include "util/digest.h"

namespace simdetect {

StopwordList::StopwordList(std::set<std::string> words)
    : words_(words.begin(), words.end()) {}

const StopwordList& StopwordList::english() {
  static const StopwordList kEnglish = parse(defaults::kStopwords);
  return kEnglish;
}

StopwordList StopwordList::parse(std::string_view contents) {
  std::set<std::string> words;
  std::istringstream in{std::string(contents)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    // normalize() lowercases and trims; a line holds a single word.
    std::string word = normalize(line);
    if (!word.empty()) words.insert(std::move(word));
  }
  return StopwordList(std::move(words));
}

StopwordList StopwordList::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open stopword list");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!is_valid_utf8(buf.str())) {
    throw IoError(path.string(), "stopword list is not valid UTF-8");
  }
  return parse(buf.str());
}

bool StopwordList::contains(std::string_view word) const {
  return words_.find(word) != words_.end();
}

std::string StopwordList::digest() const {
  Fnv1a h;
  for (const auto& w : words_) h.update_field(w);
  return h.hex();
}

}  // namespace simdetect
