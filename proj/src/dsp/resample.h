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

#ifndef SSAUDIO_DSP_RESAMPLE_H_
#define SSAUDIO_DSP_RESAMPLE_H_

#include <vector>

#include "dsp/waveform.h"

namespace ssaudio {

// Reads the input at positions i*step (Catmull-Rom cubic interpolation).
// step > 1 compresses, step < 1 expands. Output length is
// floor((len-1)/step) + 1.
std::vector<double> ResampleByStep(const std::vector<double>& input,
                                   double step);

// Sample-rate conversion used on ingestion. Returns the input unchanged
// when the rates already match.
Waveform ResampleToRate(const Waveform& w, int target_rate);

}  // namespace ssaudio

#endif  // SSAUDIO_DSP_RESAMPLE_H_
