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

#ifndef SSAUDIO_PROBE_LINEAR_PROBE_H_
#define SSAUDIO_PROBE_LINEAR_PROBE_H_

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "core/tensor.h"
#include "probe/embed.h"

namespace ssaudio {

struct ProbeTask {
  enum class Kind { kClipClassification, kFrameClassificationSed, kPitchClassification };
  Kind kind = Kind::kClipClassification;
  int num_classes = 0;

  static ProbeTask FromName(const std::string& name, int num_classes);
  std::string Name() const;
  // Pooled embeddings for clip-level tasks, frame-wise for SED.
  EmbedMode RequiredMode() const;
};

struct ProbeConfig {
  int64_t epochs = 250;  // reference recipe; desk runs pass fewer
  int64_t batch_size = 64;
  double learning_rate = 1e-4;
  double dropout = 0.1;
  double test_fraction = 0.25;
  uint64_t seed = 0;
};

// Rows ready for supervised training. clip_index ties each row back to its
// source clip (SED metrics are computed per clip track).
struct ProbeDataset {
  Tensor features;  // (n, d)
  std::vector<int> labels;
  std::vector<int64_t> clip_index;
  std::vector<std::string> clip_ids;
  double frame_duration_sec = 0.0;

  int64_t size() const { return static_cast<int64_t>(labels.size()); }
};

// Flattens an archive for the task; throws DataError when labels are
// missing or outside [0, num_classes).
ProbeDataset DatasetFromArchive(const EmbeddingArchive& archive,
                                const ProbeTask& task);

// Deterministic split by clip-id hash; every row of a clip lands on the
// same side.
void SplitByClip(const ProbeDataset& all, double test_fraction,
                 ProbeDataset* train, ProbeDataset* test);

// One fully connected layer trained with softmax cross-entropy, input
// dropout during training, and the adaptive-moment optimizer. The encoder
// is never touched: probes only ever see precomputed embeddings.
struct LinearProbe {
  Tensor weight;  // (C, d)
  Tensor bias;    // (C)

  std::vector<int> Predict(const Tensor& features) const;
};

LinearProbe TrainProbe(const ProbeDataset& train, const ProbeTask& task,
                       const ProbeConfig& cfg);

}  // namespace ssaudio

#endif  // SSAUDIO_PROBE_LINEAR_PROBE_H_
