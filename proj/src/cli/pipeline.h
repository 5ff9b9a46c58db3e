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

#ifndef SSAUDIO_CLI_PIPELINE_H_
#define SSAUDIO_CLI_PIPELINE_H_

#include <map>
#include <string>
#include <vector>

#include "pretrain/trainer.h"
#include "probe/report.h"

namespace ssaudio {

// A mechanism-level expectation of the desk pipeline did not hold (or a
// stage artifact failed verification). Maps to its own CLI exit code.
class AcceptanceFailure : public std::runtime_error {
 public:
  explicit AcceptanceFailure(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Ordered record of pipeline stages with artifact hashes. Each stage
// verifies the hashes of the artifacts it consumes, so any tampering
// between stages surfaces as an integrity error.
class RunManifest {
 public:
  void RecordStage(const std::string& stage, const std::string& config_hash,
                   const std::vector<std::string>& outputs);
  // Throws AcceptanceFailure when the file no longer matches its recorded
  // hash (or was never recorded).
  void VerifyArtifact(const std::string& path) const;
  void Save(const std::string& path) const;

 private:
  nlohmann::json stages_ = nlohmann::json::array();
  std::map<std::string, std::string> recorded_;
};

// Synthetic desk corpora: a mixed tones+textures pretraining set plus one
// labeled probe corpus per task shape.
struct DeskCorpora {
  std::string pretrain_manifest;
  std::string tones_manifest;
  std::string events_manifest;
  std::string textures_manifest;
};

struct DeskScale {
  int pretrain_tones = 100, pretrain_textures = 100;
  int probe_tones = 244, probe_events = 72, probe_textures = 96;
};

DeskCorpora GenerateDeskCorpora(const std::string& dir, uint64_t seed,
                                const DeskScale& scale);

// Desk-scale recipe: reference encoder, canonical front end, the given
// epoch/batch/seed and loss-weight settings.
TrainConfig DeskTrainConfig(int64_t epochs, int64_t batch_size, uint64_t seed,
                            double alpha, double beta,
                            SimilarityMode::Kind sim_kind);

// Row label for comparison tables, e.g. "L_clip+L_frame+L_pitch (cosine)".
std::string VariantName(const TrainConfig& cfg);

struct TaskReports {
  ProbeReport clip, sed, pitch;
};

// Embeds the three probe corpora with a frozen checkpoint and trains/
// evaluates one linear probe per task.
TaskReports ProbeCheckpoint(const std::string& checkpoint_path,
                            const DeskCorpora& corpora,
                            const std::string& work_dir,
                            const std::string& variant, uint64_t probe_seed,
                            int64_t probe_epochs, RunManifest* manifest);

// Checkpoint containing a freshly initialized (untrained) model.
std::string WriteRandomInitCheckpoint(const std::string& dir,
                                      const TrainConfig& cfg);

struct ReproOptions {
  std::string suite = "quick";  // quick | full-desk
  std::string out_dir = "repro_out";
};

// End-to-end desk pipeline on fixed seeds: generate, pretrain, embed,
// probe, report. Writes all artifacts plus run_manifest.json and throws
// AcceptanceFailure if a mechanism check fails.
void RunReproSuite(const ReproOptions& options);

}  // namespace ssaudio

#endif  // SSAUDIO_CLI_PIPELINE_H_
