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

#ifndef SSAUDIO_DSP_MANIFEST_H_
#define SSAUDIO_DSP_MANIFEST_H_

#include <optional>
#include <string>
#include <vector>

#include "dsp/waveform.h"

namespace ssaudio {

// One dataset record. Manifests are JSON-lines files; `path` and
// `frame_labels` are resolved relative to the manifest's directory.
struct ManifestEntry {
  std::string path;
  std::string clip_id;
  std::optional<int> label;
  std::optional<std::string> frame_labels;
};

struct Manifest {
  std::string base_dir;
  std::vector<ManifestEntry> entries;

  std::string ResolvePath(const std::string& relative) const;
};

Manifest ReadManifest(const std::string& path);
void WriteManifest(const std::string& path,
                   const std::vector<ManifestEntry>& entries);

// Frame labels: tab-separated "frame_index<TAB>class" lines at the feature
// frame rate (one label per hop).
std::vector<int> ReadFrameLabels(const std::string& path);
void WriteFrameLabels(const std::string& path, const std::vector<int>& labels);

// Ingestion: read WAV (stereo downmixed), resample to the canonical rate,
// peak-normalize.
Waveform LoadClipAudio(const std::string& path, int target_rate);

}  // namespace ssaudio

#endif  // SSAUDIO_DSP_MANIFEST_H_
