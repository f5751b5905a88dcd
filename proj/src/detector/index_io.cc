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

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "simdetect/detector.h"
#include "simdetect/error.h"

namespace simdetect {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kStatementScheme = "statement";

Json header_record(const CorpusIndex& index) {
  const IndexSnapshot& s = index.snapshot;
  Json features = Json::array();
  for (Method m : s.enabled) features.push_back(method_name(m));
  Json config = {
      {"k_char", s.k_char},
      {"k_top", s.k_top},
      {"features", std::move(features)},
      {"stopwords", s.stopwords_digest},
      {"phrases", s.phrases_digest},
  };
  return Json{{"schema", kIndexSchemaVersion},
              {"entries", index.entries.size()},
              {"config", std::move(config)}};
}

Json entry_record(const ReferenceArtifacts& a, const IndexSnapshot& s) {
  Json j = {
      {"id", a.id},
      {"scheme", kStatementScheme},
      {"k", kStatementGramLength},
      {"fingerprints", a.fingerprints},
      {"keywords", a.keywords},
      {"first_grams", a.first_grams},
      {"query_grams", a.query_grams},
      {"key_tokens", a.key_tokens},
      {"digest", a.digest},
  };
  if (s.enabled.contains(Method::kFullChar)) j["char_grams"] = a.char_grams;
  if (s.enabled.contains(Method::kTrigramJaccard)) j["trigrams"] = a.trigrams;
  return j;
}

// Field accessors that report the offending line.
class RecordReader {
 public:
  RecordReader(const Json& j, std::size_t line) : j_(j), line_(line) {}

  const Json& field(const char* name) const {
    const auto it = j_.find(name);
    if (it == j_.end()) fail(std::string("missing field \"") + name + "\"");
    return *it;
  }

  std::string string(const char* name) const {
    const Json& v = field(name);
    if (!v.is_string()) fail(std::string("field \"") + name + "\" must be a string");
    return v.get<std::string>();
  }

  std::size_t count(const char* name) const {
    const Json& v = field(name);
    if (!v.is_number_unsigned()) {
      fail(std::string("field \"") + name + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
  }

  std::vector<std::string> strings(const Json& v, const char* name) const {
    if (!v.is_array()) fail(std::string("field \"") + name + "\" must be an array");
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& e : v) {
      if (!e.is_string()) fail(std::string("field \"") + name + "\" must hold strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  }

  std::vector<std::string> strings(const char* name) const {
    return strings(field(name), name);
  }

  std::vector<std::vector<std::string>> nested(const char* name) const {
    const Json& v = field(name);
    if (!v.is_array()) fail(std::string("field \"") + name + "\" must be an array");
    std::vector<std::vector<std::string>> out;
    for (const auto& e : v) out.push_back(strings(e, name));
    return out;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw MalformedRecordError(line_, what);
  }

 private:
  const Json& j_;
  std::size_t line_;
};

IndexSnapshot parse_header(const Json& j, std::size_t* expected_entries) {
  if (!j.is_object()) throw MalformedRecordError(1, "header must be a JSON object");
  RecordReader r(j, 1);
  const Json& schema = r.field("schema");
  if (!schema.is_number_integer()) r.fail("field \"schema\" must be an integer");
  if (schema.get<long long>() != kIndexSchemaVersion) {
    throw VersionError("unsupported index schema version " + schema.dump() +
                       " (supported: " + std::to_string(kIndexSchemaVersion) + ")");
  }
  *expected_entries = r.count("entries");
  const Json& config = r.field("config");
  if (!config.is_object()) r.fail("field \"config\" must be an object");
  RecordReader c(config, 1);
  IndexSnapshot s;
  s.k_char = c.count("k_char");
  s.k_top = c.count("k_top");
  for (const auto& name : c.strings("features")) {
    const auto m = parse_method(name);
    if (!m) r.fail("unknown feature \"" + name + "\"");
    s.enabled.insert(*m);
  }
  s.stopwords_digest = c.string("stopwords");
  s.phrases_digest = c.string("phrases");
  return s;
}

ReferenceArtifacts parse_entry(const Json& j, std::size_t line,
                               const IndexSnapshot& s) {
  if (!j.is_object()) throw MalformedRecordError(line, "entry must be a JSON object");
  RecordReader r(j, line);
  if (r.string("scheme") != kStatementScheme) r.fail("unknown scheme");
  if (r.count("k") != kStatementGramLength) r.fail("unsupported statement gram length");
  ReferenceArtifacts a;
  a.id = r.string("id");
  a.fingerprints = r.strings("fingerprints");
  a.keywords = r.strings("keywords");
  a.first_grams = r.strings("first_grams");
  a.query_grams = r.nested("query_grams");
  a.key_tokens = r.nested("key_tokens");
  a.digest = r.string("digest");
  std::size_t expected_fields = 9;
  if (s.enabled.contains(Method::kFullChar)) {
    a.char_grams = r.strings("char_grams");
    ++expected_fields;
  }
  if (s.enabled.contains(Method::kTrigramJaccard)) {
    a.trigrams = r.strings("trigrams");
    ++expected_fields;
  }
  if (j.size() != expected_fields) r.fail("unexpected fields in entry");
  return a;
}

}  // namespace

std::string serialize_index(const CorpusIndex& index) {
  std::string out = header_record(index).dump();
  out += '\n';
  for (const auto& [id, a] : index.entries) {
    out += entry_record(a, index.snapshot).dump();
    out += '\n';
  }
  return out;
}

CorpusIndex parse_index(std::string_view contents) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < contents.size()) {
    const std::size_t nl = contents.find('\n', start);
    if (nl == std::string_view::npos) {
      throw MalformedRecordError(lines.size() + 1, "truncated record (no newline)");
    }
    lines.push_back(contents.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) throw MalformedRecordError(1, "missing header record");

  const auto parse_line = [&](std::size_t i) {
    Json j = Json::parse(lines[i], nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw MalformedRecordError(i + 1, "invalid JSON");
    return j;
  };

  CorpusIndex index;
  std::size_t expected = 0;
  index.snapshot = parse_header(parse_line(0), &expected);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    ReferenceArtifacts a = parse_entry(parse_line(i), i + 1, index.snapshot);
    const std::string id = a.id;
    if (!index.entries.try_emplace(id, std::move(a)).second) {
      throw MalformedRecordError(i + 1, "duplicate id \"" + id + "\"");
    }
  }
  if (index.entries.size() != expected) {
    throw MalformedRecordError(lines.size() + 1,
                               "expected " + std::to_string(expected) +
                                   " entries, found " +
                                   std::to_string(index.entries.size()));
  }
  return index;
}

void save_index(const CorpusIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open index for writing");
  out << serialize_index(index);
  out.flush();
  if (!out) throw IoError(path.string(), "failed writing index");
}

CorpusIndex load_index(const std::filesystem::path& path) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    throw IoError(path.string(), "is a directory, not an index file");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open index");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "failed reading index");
  return parse_index(buf.str());
}

}  // namespace simdetect
