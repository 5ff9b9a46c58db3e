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

#include "dsp/waveform.h"

#include <cmath>

#include "core/common.h"

namespace ssaudio {

void ValidateWaveform(const Waveform& w) {
  SSA_CHECK_DATA(w.sample_rate > 0) << "waveform sample_rate must be positive";
  for (double s : w.samples) {
    SSA_CHECK_DATA(std::isfinite(s)) << "waveform contains non-finite samples";
  }
}

Waveform PeakNormalize(Waveform w) {
  double peak = 0.0;
  for (double s : w.samples) peak = std::max(peak, std::fabs(s));
  if (peak > 0.0) {
    const double scale = 1.0 / peak;
    for (double& s : w.samples) s *= scale;
  }
  return w;
}

}  // namespace ssaudio
