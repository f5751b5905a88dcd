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

#include <cstdio>
#include <string>

#include "json.hpp"
#include "simdetect/detector.h"

namespace simdetect {
namespace {

std::string quote(std::string_view s) {
  return nlohmann::json(std::string(s)).dump();
}

void append_field(std::string& out, std::string_view name, std::string_view value,
                  bool& first) {
  if (!first) out += ", ";
  first = false;
  out += quote(name);
  out += ": ";
  out += value;
}

std::string score_to_json(const ResemblanceScore& s) {
  std::string out = "{";
  bool first = true;
  append_field(out, "value", format_score(s.value), first);
  append_field(out, "status", quote(status_name(s.status)), first);
  const ScoreDetail& d = s.detail;
  const auto count = [&](std::string_view name, std::uint64_t v) {
    append_field(out, name, std::to_string(v), first);
  };
  switch (s.method) {
    case Method::kFullChar:
      count("common", d.common);
      count("ref_size", d.ref_size);
      break;
    case Method::kLcsF:
      count("lcs_length", d.lcs_length);
      count("m", d.m);
      count("n", d.n);
      append_field(out, "r_lcs", format_score(d.r_lcs), first);
      append_field(out, "p_lcs", format_score(d.p_lcs), first);
      append_field(out, "beta", format_score(d.beta), first);
      break;
    default:
      count("intersection", d.intersection);
      count("union", d.union_size);
      break;
  }
  if (d.best_sentence) count("best_sentence", *d.best_sentence);
  out += "}";
  return out;
}

}  // namespace

std::string format_score(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", value);
  return buf;
}

std::string report_to_json(const FeatureReport& report) {
  std::string out = "{";
  bool first = true;
  append_field(out, "ref_id", quote(report.ref_id), first);
  append_field(out, "susp_id", quote(report.susp_id), first);
  std::string scores = "{";
  bool first_score = true;
  for (const auto& [m, s] : report.scores) {
    append_field(scores, method_name(m), score_to_json(s), first_score);
  }
  scores += "}";
  append_field(out, "scores", scores, first);
  std::string skipped = "[";
  for (Method m : report.skipped) {
    if (skipped.size() > 1) skipped += ", ";
    skipped += quote(method_name(m));
  }
  skipped += "]";
  append_field(out, "skipped", skipped, first);
  append_field(out, "combined", format_score(report.combined), first);
  out += "}";
  return out;
}

std::string report_to_text(const FeatureReport& report) {
  std::string out;
  out += "ref:  " + report.ref_id + "\n";
  out += "susp: " + report.susp_id + "\n";
  char line[160];
  for (const auto& [m, s] : report.scores) {
    std::snprintf(line, sizeof(line), "  %-16s %s  %s\n",
                  std::string(method_name(m)).c_str(), format_score(s.value).c_str(),
                  std::string(status_name(s.status)).c_str());
    out += line;
  }
  std::snprintf(line, sizeof(line), "  %-16s %s\n", "combined",
                format_score(report.combined).c_str());
  out += line;
  return out;
}

std::string ranking_to_json(
    const std::string& susp_id,
    const std::vector<std::pair<std::string, FeatureReport>>& ranking) {
  std::string out = "{";
  bool first = true;
  append_field(out, "susp_id", quote(susp_id), first);
  std::string results = "[";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (i > 0) results += ", ";
    std::string r = "{";
    bool first_r = true;
    append_field(r, "rank", std::to_string(i + 1), first_r);
    append_field(r, "doc_id", quote(ranking[i].first), first_r);
    append_field(r, "report", report_to_json(ranking[i].second), first_r);
    r += "}";
    results += r;
  }
  results += "]";
  append_field(out, "results", results, first);
  out += "}";
  return out;
}

std::string ranking_to_text(
    const std::vector<std::pair<std::string, FeatureReport>>& ranking) {
  std::string out;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const auto& [id, report] = ranking[i];
    out += std::to_string(i + 1) + "\t" + id + "\t" + format_score(report.combined);
    for (const auto& [m, s] : report.scores) {
      out += "\t";
      out += method_name(m);
      out += "=";
      out += s.applicable() ? format_score(s.value) : std::string(status_name(s.status));
    }
    out += "\n";
  }
  return out;
}

}  // namespace simdetect
