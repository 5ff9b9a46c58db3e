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

#ifndef SSAUDIO_DSP_WAVEFORM_H_
#define SSAUDIO_DSP_WAVEFORM_H_

#include <cstdint>
#include <vector>

namespace ssaudio {

// Mono audio in [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 0;

  int64_t NumSamples() const { return static_cast<int64_t>(samples.size()); }
  double DurationSeconds() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

// Throws DataError unless sample_rate > 0 and all samples are finite.
void ValidateWaveform(const Waveform& w);

// Scales so the peak magnitude is 1. All-zero input is returned unchanged.
Waveform PeakNormalize(Waveform w);

}  // namespace ssaudio

#endif  // SSAUDIO_DSP_WAVEFORM_H_
