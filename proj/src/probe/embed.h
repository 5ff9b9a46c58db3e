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

#ifndef SSAUDIO_PROBE_EMBED_H_
#define SSAUDIO_PROBE_EMBED_H_

#include <string>
#include <vector>

#include "core/tensor.h"
#include "dsp/manifest.h"

namespace ssaudio {

enum class EmbedMode { kPooled, kFramewise };

struct EmbeddedClip {
  std::string id;
  int label = -1;                 // clip-level label, pooled mode
  Tensor embeddings;              // pooled: (d); framewise: (n_frames, d)
  std::vector<int> frame_labels;  // framewise mode; -1 when unlabeled
};

// Frozen-encoder embeddings of one corpus, written as a tensor archive.
struct EmbeddingArchive {
  std::string mode;  // "pooled" | "framewise"
  int64_t d = 0;
  std::string checkpoint_hash;      // file hash of the producing checkpoint
  double frame_duration_sec = 0.0;  // framewise: seconds per embedded frame
  std::vector<EmbeddedClip> clips;

  void Save(const std::string& path) const;
  static EmbeddingArchive Load(const std::string& path);
};

// Majority vote of hop-rate labels over each encoder frame's span
// [seg_start + t*stride, seg_start + (t+1)*stride); ties go to the
// smaller class id.
std::vector<int> MapFrameLabels(const std::vector<int>& hop_labels,
                                int64_t seg_start, int64_t stride,
                                int64_t t_out);

// Embeds every manifest clip with the frozen encoder of the checkpoint.
// Clips are cut into consecutive non-overlapping segments; pooled mode
// averages the pooled embedding over segments, framewise mode concatenates
// the frame embeddings of all segments.
EmbeddingArchive EmbedCorpus(const Manifest& manifest,
                             const std::string& checkpoint_path,
                             EmbedMode mode);

}  // namespace ssaudio

#endif  // SSAUDIO_PROBE_EMBED_H_
