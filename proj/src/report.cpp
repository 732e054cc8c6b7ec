// Copyright 2026 The topicsum Authors.
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
#include <cctype>
#include <cstdio>
#include <json.hpp>

#include "topicsum/error.hpp"
#include "topicsum/pipeline.hpp"

namespace topicsum {
namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// "rsu" -> "ROUGE-SU"
std::string column_name(const std::string& metric) {
  std::string name = "ROUGE-";
  for (char c : metric.substr(1)) name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return name;
}

std::size_t column_width(const std::string& metric) {
  return std::max<std::size_t>(8, column_name(metric).size());
}

}  // namespace

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["corpus"] = {{"records", records},
                 {"ingest_skipped", ingest_skipped},
                 {"train_documents", train_documents},
                 {"heldout_documents", heldout_documents},
                 {"vocabulary", vocabulary},
                 {"summarized", summarized},
                 {"summarize_skipped", summarize_skipped}};
  j["model"] = {{"perplexity", perplexity}, {"mean_coherence", mean_coherence}};
  j["scorer"] = scorer;
  auto& sys = j["systems"] = nlohmann::ordered_json::array();
  for (const auto& s : systems) {
    nlohmann::ordered_json js;
    js["label"] = s.label;
    js["documents"] = s.documents;
    for (const auto& [name, score] : s.metrics) {
      js["metrics"][name] = {{"precision", score.precision}, {"recall", score.recall}, {"f1", score.f1}};
    }
    sys.push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

RunReport RunReport::from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    RunReport r;
    const auto& c = j.at("corpus");
    r.records = c.at("records");
    r.ingest_skipped = c.at("ingest_skipped");
    r.train_documents = c.at("train_documents");
    r.heldout_documents = c.at("heldout_documents");
    r.vocabulary = c.at("vocabulary");
    r.summarized = c.at("summarized");
    r.summarize_skipped = c.at("summarize_skipped");
    r.perplexity = j.at("model").at("perplexity").is_null() ? 0.0 : j.at("model").at("perplexity").get<double>();
    r.mean_coherence = j.at("model").at("mean_coherence");
    r.scorer = j.at("scorer");
    for (const auto& js : j.at("systems")) {
      SystemScores s;
      s.label = js.at("label");
      s.documents = js.at("documents");
      if (js.contains("metrics")) {
        for (const auto& [name, v] : js.at("metrics").items()) {
          s.metrics[name] = {v.at("precision"), v.at("recall"), v.at("f1"), false};
        }
      }
      r.systems.push_back(std::move(s));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("bad run report: ") + e.what());
  }
}

std::string RunReport::timings_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [stage, seconds] : timings_seconds) j[stage] = seconds;
  return j.dump(2) + "\n";
}

std::vector<TableRow> published_rows() {
  const auto row = [](std::string label, double r1, double r2, double rl) {
    return TableRow{std::move(label), {{"r1", r1}, {"r2", r2}, {"rl", rl}}, true};
  };
  return {
      row("LDA+TextRank extractive", 27.08, 6.89, 25.43),
      row("TextRank", 27.53, 7.40, 20.00),
      row("Seq-to-seq with attention", 22.04, 6.27, 20.87),
      row("Lead-3", 26.00, 7.24, 24.25),
      row("Pointer-Generator", 26.02, 7.92, 24.59),
      row("Topic Augmented Generator", 26.18, 8.18, 25.25),
      row("Pointer-Generator + Coverage", 27.08, 8.49, 26.25),
      row("Topic Augmented Generator + Coverage", 28.36, 9.05, 27.48),
  };
}

ReportTable report_table(std::vector<TableRow> rows, const std::vector<std::string>& extra_metrics) {
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    const double ra = a.values.contains("r1") ? a.values.at("r1") : -1.0;
    const double rb = b.values.contains("r1") ? b.values.at("r1") : -1.0;
    return ra != rb ? ra < rb : a.label < b.label;
  });
  std::vector<std::string> columns = {"r1", "r2", "rl"};
  for (const auto& m : extra_metrics) {
    if (std::find(columns.begin(), columns.end(), m) == columns.end()) columns.push_back(m);
  }
  const auto label_of = [](const TableRow& r) {
    return r.published ? r.label + " (published, not reproduced)" : r.label;
  };
  const auto cell = [](const TableRow& r, const std::string& m) {
    const auto it = r.values.find(m);
    return it == r.values.end() ? std::string("-") : fixed2(it->second);
  };

  std::size_t width = 6;
  for (const auto& r : rows) width = std::max(width, label_of(r).size());

  ReportTable t;
  std::string header = "System" + std::string(width - 6, ' ');
  t.csv = "system,published";
  for (const auto& c : columns) {
    const std::string name = column_name(c);
    header += "  " + std::string(column_width(c) - name.size(), ' ') + name;
    t.csv += "," + c + "_f1";
  }
  t.text = header + "\n" + std::string(header.size(), '-') + "\n";
  t.csv += "\n";
  for (const auto& r : rows) {
    const std::string label = label_of(r);
    std::string line = label + std::string(width - label.size(), ' ');
    t.csv += "\"" + r.label + "\"," + (r.published ? "1" : "0");
    for (const auto& c : columns) {
      const std::string v = cell(r, c);
      line += "  " + std::string(column_width(c) - v.size(), ' ') + v;
      t.csv += "," + v;
    }
    t.text += line + "\n";
    t.csv += "\n";
  }
  t.text += "Values are F1 x 100.\n";
  return t;
}

ReportTable report_table(const RunReport& report, const std::vector<std::string>& extra_metrics) {
  std::vector<TableRow> rows = published_rows();
  for (const auto& s : report.systems) {
    TableRow r;
    r.label = s.label;
    for (const auto& [name, score] : s.metrics) r.values[name] = score.f1 * 100.0;
    rows.push_back(std::move(r));
  }
  ReportTable t = report_table(std::move(rows), extra_metrics);
  t.text += "Scorer: " + report.scorer + "\n";
  return t;
}

}  // namespace topicsum
