// Copyright 2026 The ssaudio Authors.
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

#include "cli/table.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "core/common.h"

namespace ssaudio {

namespace fs = std::filesystem;

namespace {

constexpr const char* kColumns[] = {"clip_acc", "event_f1", "pitch_acc",
                                    "chroma_acc"};
constexpr const char* kBanner =
    "desk-scale synthetic-corpus scores; not comparable to results on the "
    "real corpora";
// Published reference scores for the single clip-level strategy (COLA row),
// shown with --paper-values for layout comparison only.
constexpr const char* kReferenceRow[] = {"0.459", "0.232", "0.434", "0.470"};

std::string FormatMetric(double v) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

ComparisonTable BuildComparisonTable(const std::vector<ProbeReport>& reports) {
  SSA_CHECK_DATA(!reports.empty()) << "no reports to tabulate";

  // cell index per task/metric
  auto column_of = [](const ProbeReport& r, const std::string& metric) -> int {
    if (r.task == "clip" && metric == "accuracy") return 0;
    if (r.task == "sed" && metric == "frame_f1") return 1;
    if (r.task == "sed" && metric == "onset_f1") return -1;  // in JSON only
    if (r.task == "pitch" && metric == "pitch_accuracy") return 2;
    if (r.task == "pitch" && metric == "chroma_accuracy") return 3;
    SSA_THROW(DataError) << "report for task '" << r.task
                         << "' has unexpected metric '" << metric << "'";
  };

  ComparisonTable table;
  std::map<std::string, size_t> row_of;
  std::map<std::pair<std::string, std::string>, std::string> claimed;
  for (const auto& report : reports) {
    const std::string variant =
        report.variant.empty() ? "(unlabeled)" : report.variant;
    auto key = std::make_pair(variant, report.task);
    auto it = claimed.find(key);
    if (it != claimed.end()) {
      SSA_THROW(ConfigError)
          << "two reports claim variant '" << variant << "' task '"
          << report.task << "' (checkpoints " << it->second << " and "
          << report.checkpoint_hash << ")";
    }
    claimed[key] = report.checkpoint_hash;

    if (!row_of.count(variant)) {
      row_of[variant] = table.variants.size();
      table.variants.push_back(variant);
      table.cells.emplace_back(4, "-");
    }
    auto& row = table.cells[row_of[variant]];
    for (const auto& [metric, value] : report.metrics) {
      const int col = column_of(report, metric);
      if (col >= 0) row[static_cast<size_t>(col)] = FormatMetric(value);
    }
  }
  return table;
}

std::string ComparisonTable::ToText(bool include_reference_row) const {
  size_t width = 24;
  for (const auto& v : variants) width = std::max(width, v.size());

  std::ostringstream os;
  os << "# " << kBanner << "\n";
  os << std::string(width, ' ');
  for (const char* c : kColumns) os << " | " << c;
  os << "\n" << std::string(width, '-');
  for (const char* c : kColumns) os << "-+-" << std::string(strlen(c), '-');
  os << "\n";
  if (include_reference_row) {
    std::string label = "COLA (published reference)";
    label.resize(width, ' ');
    os << label;
    for (size_t c = 0; c < 4; ++c) {
      os << " | " << kReferenceRow[c] << std::string(strlen(kColumns[c]) > 5 ? strlen(kColumns[c]) - 5 : 0, ' ');
    }
    os << "\n";
  }
  for (size_t r = 0; r < variants.size(); ++r) {
    std::string label = variants[r];
    label.resize(width, ' ');
    os << label;
    for (size_t c = 0; c < 4; ++c) {
      os << " | " << cells[r][c]
         << std::string(strlen(kColumns[c]) > cells[r][c].size()
                            ? strlen(kColumns[c]) - cells[r][c].size()
                            : 0,
                        ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::string ComparisonTable::ToCsv(bool include_reference_row) const {
  std::ostringstream os;
  os << "variant";
  for (const char* c : kColumns) os << "," << c;
  os << "\n";
  if (include_reference_row) {
    os << "COLA (published reference)";
    for (const char* v : kReferenceRow) os << "," << v;
    os << "\n";
  }
  for (size_t r = 0; r < variants.size(); ++r) {
    os << variants[r];
    for (size_t c = 0; c < 4; ++c) os << "," << cells[r][c];
    os << "\n";
  }
  return os.str();
}

nlohmann::json ComparisonTable::ToJson(bool include_reference_row) const {
  nlohmann::json rows = nlohmann::json::array();
  if (include_reference_row) {
    rows.push_back({{"variant", "COLA (published reference)"},
                    {"clip_acc", kReferenceRow[0]},
                    {"event_f1", kReferenceRow[1]},
                    {"pitch_acc", kReferenceRow[2]},
                    {"chroma_acc", kReferenceRow[3]}});
  }
  for (size_t r = 0; r < variants.size(); ++r) {
    nlohmann::json row{{"variant", variants[r]}};
    for (size_t c = 0; c < 4; ++c) row[kColumns[c]] = cells[r][c];
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"note", kBanner}, {"rows", rows}};
}

std::vector<std::string> ExpandGlob(const std::string& pattern) {
  const fs::path p(pattern);
  const std::string file_pattern = p.filename().string();
  fs::path dir = p.parent_path();
  if (dir.empty()) dir = ".";

  if (file_pattern.find('*') == std::string::npos) {
    return fs::exists(p) ? std::vector<std::string>{pattern}
                         : std::vector<std::string>{};
  }

  auto matches = [&](const std::string& name) {
    // '*' wildcards, greedy scan
    size_t n = 0;
    size_t star = std::string::npos, star_n = 0;
    size_t g = 0;
    while (n < name.size()) {
      if (g < file_pattern.size() &&
          (file_pattern[g] == name[n])) {
        ++g;
        ++n;
      } else if (g < file_pattern.size() && file_pattern[g] == '*') {
        star = g++;
        star_n = n;
      } else if (star != std::string::npos) {
        g = star + 1;
        n = ++star_n;
      } else {
        return false;
      }
    }
    while (g < file_pattern.size() && file_pattern[g] == '*') ++g;
    return g == file_pattern.size();
  };

  std::vector<std::string> out;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && matches(entry.path().filename().string())) {
      out.push_back(entry.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ssaudio
