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

#ifndef SSAUDIO_CLI_TABLE_H_
#define SSAUDIO_CLI_TABLE_H_

#include <string>
#include <vector>

#include "probe/report.h"

namespace ssaudio {

// One comparison row: a (loss combination, similarity mode) variant with a
// column per task metric (clip accuracy, event frame F1, pitch accuracy,
// chroma accuracy). Missing cells render as "-".
struct ComparisonTable {
  std::vector<std::string> variants;             // row labels, input order
  std::vector<std::vector<std::string>> cells;   // formatted metric values

  std::string ToText(bool include_reference_row) const;
  std::string ToCsv(bool include_reference_row) const;
  nlohmann::json ToJson(bool include_reference_row) const;
};

// Groups reports by variant. Throws ConfigError when two reports claim the
// same (variant, task) cell, DataError for unknown tasks.
ComparisonTable BuildComparisonTable(const std::vector<ProbeReport>& reports);

// Simple single-component glob: the directory part is literal, the file
// part may contain '*'.
std::vector<std::string> ExpandGlob(const std::string& pattern);

}  // namespace ssaudio

#endif  // SSAUDIO_CLI_TABLE_H_
