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

#ifndef SSAUDIO_DSP_PITCH_SHIFT_H_
#define SSAUDIO_DSP_PITCH_SHIFT_H_

#include "dsp/waveform.h"

namespace ssaudio {

// Phase-vocoder time stretch: output duration = input duration * stretch,
// pitch unchanged. target_len fixes the exact output sample count.
std::vector<double> TimeStretch(const std::vector<double>& input,
                                int64_t target_len);

// Scales all frequencies of the input by the factor a (a = 1.2 raises the
// pitch by 20 %). Realized as resampling at step a followed by a
// phase-vocoder stretch back, so the output has exactly the input's length
// and sample rate. Throws ConfigError when a <= 0.
Waveform PitchShift(const Waveform& w, double a);

}  // namespace ssaudio

#endif  // SSAUDIO_DSP_PITCH_SHIFT_H_
