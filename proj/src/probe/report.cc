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

#include "probe/report.h"

#include <fstream>

#include "core/common.h"
#include "probe/metrics.h"

namespace ssaudio {

nlohmann::json ProbeReport::ToJson() const {
  return nlohmann::json{{"task", task},
                        {"metrics", metrics},
                        {"train_size", train_size},
                        {"test_size", test_size},
                        {"checkpoint_hash", checkpoint_hash},
                        {"variant", variant}};
}

ProbeReport ProbeReport::FromJson(const nlohmann::json& j) {
  ProbeReport r;
  r.task = j.value("task", "");
  if (j.contains("metrics")) {
    r.metrics = j["metrics"].get<std::map<std::string, double>>();
  }
  r.train_size = j.value("train_size", 0);
  r.test_size = j.value("test_size", 0);
  r.checkpoint_hash = j.value("checkpoint_hash", "");
  r.variant = j.value("variant", "");
  return r;
}

void ProbeReport::Save(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  SSA_CHECK_DATA(out.good()) << "cannot write report: " << path;
  out << ToJson().dump(2) << "\n";
}

ProbeReport ProbeReport::Load(const std::string& path) {
  std::ifstream in(path);
  SSA_CHECK_DATA(in.good()) << "cannot open report: " << path;
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  SSA_CHECK_DATA(!j.is_discarded()) << "report is not valid JSON: " << path;
  return FromJson(j);
}

ProbeReport Evaluate(const LinearProbe& probe, const ProbeDataset& test,
                     const ProbeTask& task) {
  SSA_CHECK_DATA(test.size() > 0) << "empty evaluation set";
  const std::vector<int> preds = probe.Predict(test.features);

  ProbeReport report;
  report.task = task.Name();
  report.test_size = test.size();

  switch (task.kind) {
    case ProbeTask::Kind::kClipClassification:
      report.metrics["accuracy"] = Accuracy(preds, test.labels);
      break;
    case ProbeTask::Kind::kPitchClassification:
      report.metrics["pitch_accuracy"] = PitchAccuracy(preds, test.labels);
      report.metrics["chroma_accuracy"] = ChromaAccuracy(preds, test.labels);
      break;
    case ProbeTask::Kind::kFrameClassificationSed: {
      // regroup rows into per-clip tracks (rows are stored clip-contiguous)
      std::vector<std::vector<int>> ref_tracks, pred_tracks;
      int64_t prev_clip = -1;
      for (int64_t r = 0; r < test.size(); ++r) {
        const int64_t clip = test.clip_index[static_cast<size_t>(r)];
        if (clip != prev_clip) {
          ref_tracks.emplace_back();
          pred_tracks.emplace_back();
          prev_clip = clip;
        }
        ref_tracks.back().push_back(test.labels[static_cast<size_t>(r)]);
        pred_tracks.back().push_back(preds[static_cast<size_t>(r)]);
      }
      const SedMetrics sed =
          EvaluateSed(ref_tracks, pred_tracks, test.frame_duration_sec);
      report.metrics["frame_f1"] = sed.frame_f1;
      report.metrics["onset_f1"] = sed.onset_f1;
      break;
    }
  }
  return report;
}

ProbeReport RunProbe(const EmbeddingArchive& archive, const ProbeTask& task,
                     const ProbeConfig& cfg) {
  ProbeDataset all = DatasetFromArchive(archive, task);
  ProbeDataset train, test;
  SplitByClip(all, cfg.test_fraction, &train, &test);
  LinearProbe probe = TrainProbe(train, task, cfg);
  ProbeReport report = Evaluate(probe, test, task);
  report.train_size = train.size();
  report.checkpoint_hash = archive.checkpoint_hash;
  return report;
}

}  // namespace ssaudio
