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

#ifndef SSAUDIO_DSP_LOGMEL_H_
#define SSAUDIO_DSP_LOGMEL_H_

#include <string>

#include "core/tensor.h"
#include "dsp/mel.h"
#include "dsp/waveform.h"

namespace ssaudio {

// One (n_mels x n_frames) window of log-mel features, the unit every loss
// operates on.
struct FeatureSegment {
  Tensor values;  // (n_mels, n_frames)
  std::string source_id;
  int64_t start_frame = 0;

  int64_t n_mels() const { return values.dim(0); }
  int64_t n_frames() const { return values.dim(1); }
};

// Log-compressed mel spectrogram, shape (n_mels, T_total).
//
// Framing: with centered padding (default), frame t spans samples
// [t*hop - (window-hop)/2, ...), zero-padded at the edges, and
// T_total = floor(len / hop); a 960 ms clip at 16 kHz gives exactly 96
// frames. With padding "none", T_total = floor((len - window)/hop) + 1.
// Deterministic: identical (waveform, config) give bit-identical output.
//
// Throws DataError for invalid waveforms or input shorter than one window.
Tensor ExtractLogMel(const Waveform& w, const MelConfig& cfg);

// Copies frames [start_frame, start_frame + segment_frames) out of a full
// feature matrix. Throws DataError when the range does not fit.
FeatureSegment SliceSegment(const Tensor& features, int64_t start_frame,
                            const MelConfig& cfg, const std::string& source_id);

}  // namespace ssaudio

#endif  // SSAUDIO_DSP_LOGMEL_H_
