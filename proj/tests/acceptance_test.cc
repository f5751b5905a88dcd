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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "simdetect/detector.h"
#include "test_util.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace simdetect {
namespace {

using Clock = std::chrono::steady_clock;
using Tokens = std::vector<std::string>;

// Collects the first few failure messages of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) detail_ << (failures_ > 1 ? "; " : "") << what;
  }
  void note(const std::string& s) { notes_ << (notes_.str().empty() ? "" : ", ") << s; }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (!notes_.str().empty()) out << ", " << notes_.str();
    if (failures_ > 0) out << ", " << failures_ << " failed: " << detail_.str();
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream detail_;
  std::ostringstream notes_;
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<Document> corpus() {
  std::vector<Document> docs;
  for (int i = 1; i <= 20; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "doc%02d.txt", i);
    docs.push_back(make_document(
        name, testing::read_file(testing::data_path(std::string("corpus/") + name))));
  }
  return docs;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / "simdetect_acceptance";
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

// --- 1-4: worked examples ----------------------------------------------------

void criterion1(Check& c) {
  const auto t0 = Clock::now();
  const auto g = char_kgrams("touch", 4);
  const double ms = ms_since(t0);
  c.expect(g.keys() == GramSet{"touc", "ouch"}, "grams differ");
  c.expect(g.total() == 2, "total " + std::to_string(g.total()));
  c.expect(ms < 1.0, "took " + fmt(ms) + " ms");
  c.note(fmt(ms) + " ms");
}

void criterion2(Check& c) {
  const auto t = word_trigrams(normalize("Web Based Cross Language Plagiarism Detection"));
  c.expect(t == GramSet{"web based cross", "based cross language", "cross language plagiarism",
                        "language plagiarism detection"},
           "trigrams differ");
}

void criterion3(Check& c) {
  const auto g = char_kgrams(normalize("english word"), 4);
  c.expect(g.keys() == GramSet{"engl", "ngli", "glis", "lish", "ishw", "shwo", "hwor", "word"},
           "grams differ");
  c.expect(g.distinct() == 8, "distinct " + std::to_string(g.distinct()));
}

void criterion4(Check& c) {
  const Tokens s1 = tokenize(normalize("Player kicked the ball."));
  const Tokens s2 = tokenize(normalize("Player kick the ball."));
  const Tokens s3 = tokenize(normalize("The ball kick player."));
  const auto a = lcs_fmeasure(s1, s2, FixedBeta{1.0});
  const auto b = lcs_fmeasure(s1, s3, FixedBeta{1.0});
  c.expect(a.lcs_length == 3, "lcs(S1,S2) " + std::to_string(a.lcs_length));
  c.expect(b.lcs_length == 2, "lcs(S1,S3) " + std::to_string(b.lcs_length));
  c.expect(close(a.f_lcs, 0.75, 1e-12), "f(S1,S2) " + fmt(a.f_lcs));
  c.expect(close(b.f_lcs, 0.5, 1e-12), "f(S1,S3) " + fmt(b.f_lcs));
  c.note("f = " + fmt(a.f_lcs) + ", " + fmt(b.f_lcs));
}

// --- 5: weight normalization ---------------------------------------------------

void criterion5(Check& c) {
  std::mt19937 rng(20260501);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    GramMultiset m(GramKind::kCharacter, 2);
    const int distinct = 1 + static_cast<int>(rng() % 40);
    std::map<std::string, std::uint64_t> counts;
    for (int j = 0; j < distinct; ++j) {
      const std::uint64_t n = 1 + rng() % 1000;
      const std::string g = "g" + std::to_string(j);
      counts[g] = n;
      m.add(g, n);
    }
    const GramWeights w = gram_weights(m);
    std::uint64_t total = 0;
    for (const auto& [_, n] : counts) total += n;
    double sum = 0.0;
    for (const auto& [g, x] : w.weights()) sum += x;
    worst = std::max(worst, std::fabs(sum - 1.0));
    c.expect(std::fabs(sum - 1.0) <= 1e-9, "sum " + fmt(sum));
    // Exact rational check: numerator and denominator are the raw counts.
    c.expect(w.total() == total, "denominator");
    for (const auto& [g, n] : counts) {
      c.expect(w.count(g) == n, "numerator of " + g);
      c.expect(w.weight(g) == static_cast<double>(n) / static_cast<double>(total),
               "weight of " + g);
    }
  }
  // Integer fixtures.
  GramMultiset f(GramKind::kCharacter, 2);
  f.add("aa", 3);
  f.add("bb", 1);
  const GramWeights fw = gram_weights(f);
  c.expect(fw.count("aa") == 3 && fw.count("bb") == 1 && fw.total() == 4, "3/4, 1/4 fixture");
  c.expect(fw.weight("aa") == 0.75 && fw.weight("bb") == 0.25, "3/4, 1/4 values");
  const GramWeights tw = gram_weights(char_kgrams("touch", 4));
  c.expect(tw.count("touc") == 1 && tw.total() == 2 && tw.weight("ouch") == 0.5, "touch fixture");
  c.note("max |sum-1| = " + fmt(worst));
}

// --- 6: oracle equivalence -----------------------------------------------------

std::size_t brute_lcs(const Tokens& x, const Tokens& y) {
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << x.size()); ++mask) {
    Tokens sub;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(x[i]);
    }
    if (sub.size() > best && testing::is_subsequence(sub, y)) best = sub.size();
  }
  return best;
}

std::map<std::string, std::uint64_t> naive_kgrams(const std::string& text, std::size_t k) {
  std::vector<std::string> chars;
  for (std::size_t i = 0; i < text.size();) {
    const auto b = static_cast<unsigned char>(text[i]);
    const std::size_t len = b < 0x80 ? 1 : b < 0xE0 ? 2 : b < 0xF0 ? 3 : 4;
    const std::string cp = text.substr(i, len);
    if (cp != " ") chars.push_back(cp);
    i += len;
  }
  std::map<std::string, std::uint64_t> out;
  for (std::size_t s = 0; s + k <= chars.size(); ++s) {
    std::string g;
    for (std::size_t j = s; j < s + k; ++j) g += chars[j];
    ++out[g];
  }
  return out;
}

void criterion6(Check& c) {
  const auto t0 = Clock::now();
  std::mt19937 rng(606);
  static const char* kAlphabet[] = {"a", "b", "c"};
  const int kCases = 1000;
  for (int i = 0; i < kCases; ++i) {
    Tokens x(rng() % 9), y(rng() % 9);
    for (auto& t : x) t = kAlphabet[rng() % 3];
    for (auto& t : y) t = kAlphabet[rng() % 3];
    const std::size_t dp = lcs_length(x, y);
    const std::size_t bf = brute_lcs(x, y);
    c.expect(dp == bf, "lcs " + std::to_string(dp) + " vs " + std::to_string(bf));
  }
  for (int i = 0; i < kCases; ++i) {
    std::string text = normalize(testing::random_text(rng, 14));
    std::size_t cps = 0;
    std::string cut;
    for (std::size_t j = 0; j < text.size() && cps < 30;) {
      const auto b = static_cast<unsigned char>(text[j]);
      const std::size_t len = b < 0x80 ? 1 : b < 0xE0 ? 2 : b < 0xF0 ? 3 : 4;
      cut += text.substr(j, len);
      j += len;
      ++cps;
    }
    const std::size_t k = 1 + rng() % 6;
    c.expect(char_kgrams(cut, k).counts() == naive_kgrams(cut, k), "kgrams of '" + cut + "'");
  }
  const double ms = ms_since(t0);
  c.expect(ms < 10000.0, "took " + fmt(ms) + " ms");
  c.note(std::to_string(kCases) + " + " + std::to_string(kCases) + " cases in " + fmt(ms) +
         " ms");
}

// --- 7: score contracts ----------------------------------------------------------

void criterion7(Check& c) {
  std::mt19937 rng(7007);
  DetectorConfig cfg;
  cfg.enabled = {std::begin(kAllMethods), std::end(kAllMethods)};
  const int kDocs = 1200;
  std::size_t self_checked = 0;
  for (int i = 0; i < kDocs; ++i) {
    const Document x = make_document("x", testing::random_document(rng, 40));
    const Document y = make_document("y", testing::random_document(rng, 40));
    const auto xy = analyze_pair(x, y, cfg);
    const auto xx = analyze_pair(x, x, cfg);
    for (const auto& [m, s] : xy.scores) {
      c.expect(s.value >= 0.0 && s.value <= 1.0,
               std::string(method_name(m)) + " out of range: " + fmt(s.value));
    }
    c.expect(xy.combined >= 0.0 && xy.combined <= 1.0, "combined " + fmt(xy.combined));
    for (const auto& [m, s] : xx.scores) {
      if (!s.applicable()) continue;
      ++self_checked;
      c.expect(close(s.value, 1.0, 1e-12),
               std::string(method_name(m)) + "(x,x) = " + fmt(s.value));
    }
    if (xx.skipped.size() < xx.scores.size()) {
      c.expect(close(xx.combined, 1.0, 1e-12), "combined(x,x) = " + fmt(xx.combined));
    }
    // Jaccard-based scores are symmetric.
    const auto yx = analyze_pair(y, x, cfg);
    for (Method m : {Method::kTrigramJaccard, Method::kStatement, Method::kTopKeyword}) {
      c.expect(xy.scores.at(m).value == yx.scores.at(m).value,
               std::string(method_name(m)) + " not symmetric");
    }
    const GramSet a = char_kgrams(x.normalized_text, 3).keys();
    const GramSet b = char_kgrams(y.normalized_text, 3).keys();
    c.expect(jaccard(a, b).value == jaccard(b, a).value, "jaccard not symmetric");
  }
  c.note(std::to_string(kDocs) + " generated pairs, " + std::to_string(self_checked) +
         " self scores");
}

// --- 8: end-to-end self-similarity ---------------------------------------------

double cli_combined(const std::string& args, Check& c) {
  const auto r = testing::run_cli(args);
  c.expect(r.exit_code == 0, "exit " + std::to_string(r.exit_code) + " for " + args);
  try {
    return json::parse(r.out).at("combined").get<double>();
  } catch (const std::exception& e) {
    c.expect(false, std::string("bad output: ") + e.what());
    return -1.0;
  }
}

void criterion8(Check& c) {
  const std::string doc = testing::quote(testing::data_path("corpus/doc01.txt"));
  const std::string latin = testing::quote(testing::data_path("alpha_a.txt"));
  const std::string greek = testing::quote(testing::data_path("alpha_b.txt"));
  const std::string all = "--features full_char,trigram_jaccard,statement,first_sentence,"
                          "query_phrase,top_keyword,lcs_f ";
  const double self = cli_combined("compare " + doc + " " + doc, c);
  c.expect(self == 1.0, "compare file file = " + fmt(self));
  const double self_all = cli_combined("compare " + all + doc + " " + doc, c);
  c.expect(self_all == 1.0, "compare file file (all features) = " + fmt(self_all));
  const double unrelated = cli_combined("compare " + latin + " " + greek, c);
  c.expect(unrelated == 0.0, "unrelated = " + fmt(unrelated));
  const double unrelated_all = cli_combined("compare " + all + latin + " " + greek, c);
  c.expect(unrelated_all == 0.0, "unrelated (all features) = " + fmt(unrelated_all));
  c.note("self " + fmt(self) + ", unrelated " + fmt(unrelated));
}

// --- 9: determinism and persistence ---------------------------------------------

void criterion9(Check& c) {
  TempDir tmp;
  const auto docs = corpus();
  const DetectorConfig cfg;
  const CorpusIndex mem = build_index(docs, cfg, 4);
  const fs::path path = tmp.path / "index.jsonl";
  save_index(mem, path);
  const CorpusIndex loaded = load_index(path);
  c.expect(loaded == mem, "loaded index differs");

  std::vector<Document> queries = docs;
  queries.push_back(make_document("multi", testing::read_file(testing::data_path("multi.txt"))));
  queries.push_back(make_document("greek", testing::read_file(testing::data_path("alpha_b.txt"))));
  double worst = 0.0;
  for (const auto& q : queries) {
    const auto a = rank_candidates(q, mem, cfg, 20);
    const auto b = rank_candidates(q, loaded, cfg, 20);
    c.expect(a.size() == b.size(), "ranking sizes differ");
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      c.expect(a[i].first == b[i].first, "rank order differs for " + q.id);
      worst = std::max(worst, std::fabs(a[i].second.combined - b[i].second.combined));
      for (const auto& [m, s] : a[i].second.scores) {
        worst = std::max(worst, std::fabs(s.value - b[i].second.scores.at(m).value));
      }
    }
  }
  c.expect(worst <= 1e-12, "max score drift " + fmt(worst));

  // The command-line scan agrees with the in-memory ranking.
  const fs::path cli_index = tmp.path / "cli.jsonl";
  const std::string dir = testing::quote(testing::data_path("corpus"));
  c.expect(testing::run_cli("index " + dir + " " + testing::quote(cli_index)).exit_code == 0,
           "index failed");
  const std::string first = testing::read_file(cli_index);
  c.expect(first == serialize_index(mem), "CLI index differs from library index");
  const auto scan = testing::run_cli("scan --top 20 " +
                                     testing::quote(testing::data_path("multi.txt")) + " " +
                                     testing::quote(cli_index));
  c.expect(scan.exit_code == 0, "scan failed");
  try {
    const auto results = json::parse(scan.out).at("results");
    const auto want = rank_candidates(queries[20], mem, cfg, 20);
    c.expect(results.size() == want.size(), "scan size");
    for (std::size_t i = 0; i < std::min(results.size(), want.size()); ++i) {
      c.expect(results[i].at("doc_id").get<std::string>() == want[i].first, "scan order");
      const double got = results[i].at("report").at("combined").get<double>();
      // Reports print 12 decimals.
      c.expect(std::fabs(got - want[i].second.combined) <= 5e-13 + 1e-15, "scan score");
    }
  } catch (const std::exception& e) {
    c.expect(false, std::string("bad scan output: ") + e.what());
  }

  // Re-running index on identical input, serially and in parallel.
  for (const char* jobs : {"1", "8"}) {
    c.expect(testing::run_cli("index --jobs " + std::string(jobs) + " " + dir + " " +
                              testing::quote(cli_index))
                     .exit_code == 0,
             "re-index failed");
    c.expect(testing::read_file(cli_index) == first,
             std::string("re-index with --jobs ") + jobs + " not byte-identical");
  }
  c.note("max drift " + fmt(worst) + ", " + std::to_string(first.size()) + " index bytes");
}

// --- 10: space usage --------------------------------------------------------------

void criterion10(Check& c) {
  const auto docs = corpus();
  const DetectorConfig cfg;
  for (const auto& d : docs) {
    std::size_t chars = 0;
    for (char ch : d.normalized_text) chars += ch != ' ';  // corpus is ASCII
    std::size_t fingerprinted = 0;
    for (const auto& s : d.sentences) {
      const GramWeights w = gram_weights(char_kgrams(d.normalized_text, 4));
      fingerprinted += least_frequent_fingerprint(s, w).has_value();
    }
    c.expect(full_char_bytes(d, 4) == 4 * (chars - 3), d.id + ": full char bytes");
    c.expect(statement_bytes(d) == 12 * fingerprinted, d.id + ": statement bytes");
    c.expect(fingerprinted <= d.sentences.size(), d.id + ": sentences");
  }

  const auto rows = run_benchmark(docs, cfg);
  std::map<std::string, double> lib;
  for (const auto& r : rows) lib[r.scheme] = r.bytes_per_document;
  c.expect(lib.count("statement") && lib.count("full_char"), "bench rows missing");
  c.expect(lib["statement"] < lib["full_char"],
           "statement " + fmt(lib["statement"]) + " >= full_char " + fmt(lib["full_char"]));

  const auto bench =
      testing::run_cli("bench --format json " + testing::quote(testing::data_path("corpus")));
  c.expect(bench.exit_code == 0, "bench failed");
  try {
    std::map<std::string, double> cli;
    for (const auto& row : json::parse(bench.out)) {
      cli[row.at("scheme").get<std::string>()] = row.at("bytes_per_document").get<double>();
      c.expect(row.at("documents").get<int>() == 20, "bench documents");
    }
    c.expect(cli == lib, "bench command bytes differ from library");
    c.expect(cli["statement"] < cli["full_char"], "bench command: statement not smaller");
  } catch (const std::exception& e) {
    c.expect(false, std::string("bad bench output: ") + e.what());
  }
  c.note("bytes/doc statement " + fmt(lib["statement"]) + " vs full_char " +
         fmt(lib["full_char"]));
}

}  // namespace
}  // namespace simdetect

int main() {
  using simdetect::Check;
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"char 4-grams of 'touch'", simdetect::criterion1},
      {"word trigrams of the title example", simdetect::criterion2},
      {"char 4-grams of 'english word'", simdetect::criterion3},
      {"LCS F-measure examples", simdetect::criterion4},
      {"gram weight normalization", simdetect::criterion5},
      {"oracle equivalence for LCS and k-grams", simdetect::criterion6},
      {"score contracts on generated documents", simdetect::criterion7},
      {"end-to-end self-similarity", simdetect::criterion8},
      {"determinism and persistence", simdetect::criterion9},
      {"statement fingerprints use less space", simdetect::criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    failed += !c.ok();
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": "
              << criteria[i].first << " (" << c.summary() << ")\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
