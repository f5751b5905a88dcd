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

// simdetect: compare documents, build and scan corpus indexes, benchmark the
// fingerprint schemes.
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 index version or
// configuration mismatch.

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "simdetect/detector.h"
#include "simdetect/error.h"

namespace fs = std::filesystem;

namespace simdetect {
namespace {

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kVersion = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

struct ConfigFlags {
  std::optional<std::size_t> k;
  std::optional<std::size_t> top_keywords;
  std::optional<std::string> beta;
  std::optional<std::string> weights;
  std::optional<std::string> features;
  std::optional<std::string> stopwords;
  std::optional<std::string> phrases;
  std::string format = "json";
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f) {
  cmd->add_option("--k", f.k, "Character gram length (default 4)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--top-keywords", f.top_keywords, "Top keyword count (default 10)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--beta", f.beta, "LCS beta: 'ratio' (P/R) or a number (default 1)");
  cmd->add_option("--weights", f.weights, "Feature weights, e.g. lcs_f=2,statement=1");
  cmd->add_option("--features", f.features,
                  "Enabled features: full_char,trigram_jaccard,statement,"
                  "first_sentence,query_phrase,top_keyword,lcs_f");
  cmd->add_option("--stopwords", f.stopwords, "Stopword list file");
  cmd->add_option("--phrases", f.phrases, "Query phrase list file");
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_number(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("invalid " + what + ": '" + s + "'");
  }
  return v;
}

Method parse_method_or_throw(const std::string& name) {
  const auto m = parse_method(name);
  if (!m) throw UsageError("unknown feature '" + name + "'");
  return *m;
}

// Builds the detector configuration. `snapshot` supplies defaults for flags
// the user did not set (scan reuses the index's settings).
DetectorConfig make_config(const ConfigFlags& f, const IndexSnapshot* snapshot) {
  DetectorConfig cfg;
  if (snapshot != nullptr) {
    cfg.k_char = snapshot->k_char;
    cfg.k_top = snapshot->k_top;
    cfg.enabled = snapshot->enabled;
  }
  if (f.k) cfg.k_char = *f.k;
  if (f.top_keywords) cfg.k_top = *f.top_keywords;
  if (f.beta) {
    if (*f.beta == "ratio") {
      cfg.beta = RatioBeta{};
    } else {
      const double b = parse_number(*f.beta, "--beta");
      if (!(b >= 0.0)) throw UsageError("--beta must be non-negative");
      cfg.beta = FixedBeta{b};
    }
  }
  if (f.features) {
    cfg.enabled.clear();
    for (const auto& name : split_csv(*f.features)) {
      cfg.enabled.insert(parse_method_or_throw(name));
    }
    if (cfg.enabled.empty()) throw UsageError("--features is empty");
  }
  if (f.weights) {
    for (const auto& item : split_csv(*f.weights)) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw UsageError("--weights expects feature=weight, got '" + item + "'");
      }
      const Method m = parse_method_or_throw(item.substr(0, eq));
      cfg.feature_weights[m] = parse_number(item.substr(eq + 1), "weight");
    }
  }
  if (f.stopwords) {
    cfg.stopword_path = *f.stopwords;
    cfg.stopwords = StopwordList::from_file(*f.stopwords);
  }
  if (f.phrases) {
    cfg.phrase_path = *f.phrases;
    cfg.phrases = load_query_phrases(*f.phrases);
  }
  try {
    cfg.validate();
  } catch (const InvalidParameterError& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

std::string read_text_file(const fs::path& path) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) throw IoError(path.string(), "is a directory");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  std::string text = buf.str();
  if (!is_valid_utf8(text)) throw IoError(path.string(), "not valid UTF-8");
  return text;
}

Document load_document(const fs::path& path, std::string id, const DetectorConfig& cfg) {
  return make_document(std::move(id), read_text_file(path), cfg.stopwords);
}

// *.txt files under `dir`, sorted by id (the path relative to `dir`).
std::vector<Document> load_corpus(const fs::path& dir, bool recursive,
                                  const DetectorConfig& cfg) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw IoError(dir.string(), "not a directory");
  std::vector<fs::path> files;
  const auto consider = [&](const fs::directory_entry& e) {
    if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
  };
  try {
    if (recursive) {
      for (const auto& e : fs::recursive_directory_iterator(dir)) consider(e);
    } else {
      for (const auto& e : fs::directory_iterator(dir)) consider(e);
    }
  } catch (const fs::filesystem_error& e) {
    throw IoError(dir.string(), e.what());
  }
  std::vector<std::pair<std::string, fs::path>> named;
  for (const auto& p : files) named.emplace_back(p.lexically_relative(dir).generic_string(), p);
  std::sort(named.begin(), named.end());
  std::vector<Document> docs;
  docs.reserve(named.size());
  for (const auto& [id, p] : named) docs.push_back(load_document(p, id, cfg));
  return docs;
}

int cmd_compare(const std::string& ref_path, const std::string& susp_path,
                const ConfigFlags& flags) {
  const DetectorConfig cfg = make_config(flags, nullptr);
  const Document ref = load_document(ref_path, ref_path, cfg);
  const Document susp = load_document(susp_path, susp_path, cfg);
  const FeatureReport report = analyze_pair(ref, susp, cfg);
  if (flags.format == "text") {
    std::cout << report_to_text(report);
  } else {
    std::cout << report_to_json(report) << "\n";
  }
  return kOk;
}

int cmd_index(const std::string& dir, const std::string& out_path,
              const ConfigFlags& flags, bool recursive, std::size_t jobs) {
  const DetectorConfig cfg = make_config(flags, nullptr);
  const std::vector<Document> docs = load_corpus(dir, recursive, cfg);
  if (docs.empty()) std::cerr << "warning: no .txt files in " << dir << "\n";
  const CorpusIndex index = build_index(docs, cfg, jobs);
  save_index(index, out_path);
  std::cout << index.entries.size() << " entries\n";
  return kOk;
}

int cmd_scan(const std::string& susp_path, const std::string& index_path,
             const ConfigFlags& flags, std::size_t top) {
  const CorpusIndex index = load_index(index_path);
  const DetectorConfig cfg = make_config(flags, &index.snapshot);
  const Document susp = load_document(susp_path, susp_path, cfg);
  const auto ranking = rank_candidates(susp, index, cfg, top);
  if (flags.format == "text") {
    std::cout << ranking_to_text(ranking);
  } else {
    std::cout << ranking_to_json(susp.id, ranking) << "\n";
  }
  return kOk;
}

int cmd_bench(const std::string& dir, const ConfigFlags& flags, bool recursive) {
  const DetectorConfig cfg = make_config(flags, nullptr);
  const std::vector<Document> docs = load_corpus(dir, recursive, cfg);
  if (docs.empty()) std::cerr << "warning: no .txt files in " << dir << "\n";
  const auto rows = run_benchmark(docs, cfg);
  if (flags.format == "text") {
    std::cout << bench_to_text(rows);
  } else {
    std::cout << bench_to_json(rows) << "\n";
  }
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Fingerprint and feature based text similarity detection"};
  app.require_subcommand(1);

  ConfigFlags compare_flags, index_flags, scan_flags, bench_flags;
  std::string ref_path, susp_path, dir, out_path, index_path;
  bool recursive = false;
  std::size_t jobs = 1;
  std::size_t top = 10;

  auto* compare = app.add_subcommand("compare", "Compare a reference and a suspect file");
  compare->add_option("ref", ref_path, "Reference document")->required();
  compare->add_option("susp", susp_path, "Suspect document")->required();
  add_config_flags(compare, compare_flags);

  auto* index = app.add_subcommand("index", "Build a corpus index from a directory");
  index->add_option("dir", dir, "Directory of .txt files")->required();
  index->add_option("out", out_path, "Index file to write")->required();
  index->add_flag("--recursive", recursive, "Descend into subdirectories");
  index->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_config_flags(index, index_flags);

  auto* scan = app.add_subcommand("scan", "Rank indexed documents against a suspect");
  scan->add_option("susp", susp_path, "Suspect document")->required();
  scan->add_option("index", index_path, "Index file")->required();
  scan->add_option("--top", top, "Number of results (default 10)");
  add_config_flags(scan, scan_flags);

  auto* bench = app.add_subcommand("bench", "Time and size each scheme on a corpus");
  bench->add_option("dir", dir, "Directory of .txt files")->required();
  bench->add_flag("--recursive", recursive, "Descend into subdirectories");
  add_config_flags(bench, bench_flags);
  bench_flags.format = "text";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (compare->parsed()) return cmd_compare(ref_path, susp_path, compare_flags);
    if (index->parsed()) return cmd_index(dir, out_path, index_flags, recursive, jobs);
    if (scan->parsed()) return cmd_scan(susp_path, index_path, scan_flags, top);
    if (bench->parsed()) return cmd_bench(dir, bench_flags, recursive);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const VersionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVersion;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const MalformedRecordError& e) {
    std::cerr << "error: " << index_path << ": " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}

}  // namespace
}  // namespace simdetect

int main(int argc, char** argv) { return simdetect::run(argc, argv); }
