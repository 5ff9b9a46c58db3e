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

#ifndef SSAUDIO_PROBE_REPORT_H_
#define SSAUDIO_PROBE_REPORT_H_

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "probe/linear_probe.h"

namespace ssaudio {

// Result of one frozen-encoder evaluation. `variant` carries the loss
// combination / similarity mode that produced the checkpoint so reports can
// be grouped into comparison tables.
struct ProbeReport {
  std::string task;
  std::map<std::string, double> metrics;  // all values in [0, 1]
  int64_t train_size = 0;
  int64_t test_size = 0;
  std::string checkpoint_hash;
  std::string variant;

  nlohmann::json ToJson() const;
  static ProbeReport FromJson(const nlohmann::json& j);
  void Save(const std::string& path) const;
  static ProbeReport Load(const std::string& path);
};

// Computes the task's metrics on a held-out dataset:
//   clip  -> accuracy
//   sed   -> frame_f1 + onset_f1 (per-clip tracks, 200 ms onset collar)
//   pitch -> pitch_accuracy (88-way) + chroma_accuracy (mod 12)
ProbeReport Evaluate(const LinearProbe& probe, const ProbeDataset& test,
                     const ProbeTask& task);

// Split, train, evaluate: the standard probe pipeline over one archive.
ProbeReport RunProbe(const EmbeddingArchive& archive, const ProbeTask& task,
                     const ProbeConfig& cfg);

}  // namespace ssaudio

#endif  // SSAUDIO_PROBE_REPORT_H_
